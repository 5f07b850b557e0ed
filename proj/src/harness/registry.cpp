#include "fflab/ff/random.hpp"
#include "fflab/harness/scenario.hpp"

namespace fflab::harness {

std::uint64_t Context::trial_seed(std::uint64_t t) const { return derive_seed(params.seed, id, t); }

const BaselineSpec* Scenario::baseline_for(int dim) const {
    if (baselines.size() == 1) return &baselines[0];
    for (const auto& b : baselines)
        if (b.params.dim == dim) return &b;
    return nullptr;
}

const std::vector<Scenario>& registry() {
    static const std::vector<Scenario> all = [] {
        std::vector<Scenario> v;
        add_fourier_scenarios(v);
        add_combinatorics_scenarios(v);
        add_kakeya_scenarios(v);
        add_misc_scenarios(v);
        return v;
    }();
    return all;
}

const Scenario& find_scenario(const std::string& id) {
    for (const auto& s : registry())
        if (s.id == id) return s;
    throw UnknownScenario("no scenario named '" + id + "'");
}

} // namespace fflab::harness
