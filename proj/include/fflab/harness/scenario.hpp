#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "fflab/harness/report.hpp"

namespace fflab::harness {

constexpr double kSlack = 2.0;
constexpr double kExactTol = 1e-9;

struct Context {
    std::string id;
    Params params;
    bool oracle = false;  // baseline generation: exhaustive or enlarged suite
    int p() const { return params.prime; }
    int d() const { return params.dim; }
    std::uint64_t trial_seed(std::uint64_t t) const;
};

// What a scenario body measures; status is decided by the runner.
struct Outcome {
    double metric = 0.0;
    std::vector<cd> witness;          // worst input seen
    json details = json::object();
    bool applicable = true;
    std::string note;
};

// One baseline per (scenario, dimension) where the constant depends on the dimension.
struct BaselineSpec {
    std::string key;
    std::string oracle;
    int version = 1;
    Params params;  // oracle run parameters (smallest prime)
};

struct Scenario {
    std::string id;
    std::string anchor;
    Kind kind = Kind::exact_identity;
    std::string metric_name = "max_deviation";
    double tolerance = kExactTol;        // exact_identity / exponent_arith threshold
    bool lower_bound = false;            // constant_tracked: metric must stay >= baseline / slack
    std::vector<int> primes, dims;
    int trials = 1;
    std::vector<BaselineSpec> baselines;
    std::function<Outcome(const Context&)> run;

    const BaselineSpec* baseline_for(int dim) const;
};

const std::vector<Scenario>& registry();
const Scenario& find_scenario(const std::string& id);  // UnknownScenario

// Registration hooks, one per scenario family.
void add_fourier_scenarios(std::vector<Scenario>& out);
void add_combinatorics_scenarios(std::vector<Scenario>& out);
void add_kakeya_scenarios(std::vector<Scenario>& out);
void add_misc_scenarios(std::vector<Scenario>& out);

} // namespace fflab::harness
