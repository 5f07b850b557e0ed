#pragma once

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>

#include "fflab/ff/ffunction.hpp"
#include "fflab/ff/parallel.hpp"
#include "fflab/ff/random.hpp"
#include "fflab/harness/scenario.hpp"
#include "fflab/surfaces/surface.hpp"

namespace fflab::harness {

struct Trial {
    double metric = 0.0;
    std::vector<cd> witness;
    json info = json::object();
    bool skip = false;  // hypothesis not met for this draw
};

// Runs n seeded trials (slot per trial, order independent) and keeps the worst one:
// the largest metric, or the smallest with lowest = true.
inline Outcome worst_trial(const Context& c, int n, const std::function<Trial(int, Rng&)>& body, bool lowest = false) {
    std::vector<Trial> res(n);
    std::vector<std::exception_ptr> errs(n);
    parallel_for(std::uint64_t(n), [&](std::uint64_t t) {
        try {
            Rng rng(c.trial_seed(t));
            res[t] = body(int(t), rng);
        } catch (...) {
            errs[t] = std::current_exception();
        }
    });
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
    Outcome o;
    int worst = -1, used = 0;
    for (int t = 0; t < n; ++t) {
        if (res[t].skip) continue;
        ++used;
        auto key = [&](const Trial& r) {
            if (std::isnan(r.metric)) return lowest ? -kInf : kInf;
            return r.metric;
        };
        if (worst < 0 || (lowest ? key(res[t]) < key(res[worst]) : key(res[t]) > key(res[worst]))) worst = t;
    }
    if (worst < 0) {
        o.applicable = false;
        o.note = "no trial met the hypotheses";
        return o;
    }
    o.metric = res[worst].metric;
    o.witness = std::move(res[worst].witness);
    o.details["trials_used"] = used;
    o.details["worst_trial"] = worst;
    o.details["worst"] = res[worst].info;
    return o;
}

inline Outcome not_applicable(const std::string& why) {
    Outcome o;
    o.applicable = false;
    o.note = why;
    return o;
}

inline double logp(double x, int p) { return std::log(x) / std::log(double(p)); }

inline std::vector<cd> random_values(Rng& rng, std::uint64_t n) {
    std::vector<cd> v(n);
    for (auto& z : v) z = rng.complex_unit_box();
    return v;
}

// |z| in [lo, hi] with a uniform phase.
inline cd random_sim1(Rng& rng, double lo = 1.0, double hi = 2.0) {
    double r = rng.uniform(lo, hi), th = rng.uniform(0.0, 2.0 * M_PI);
    return std::polar(r, th);
}

// k distinct indices below n, sorted.
inline std::vector<std::uint64_t> random_subset(Rng& rng, std::uint64_t n, std::uint64_t k) {
    auto v = rng.sample(n, std::min(n, k));
    std::sort(v.begin(), v.end());
    return v;
}

// Random values with |z| in [lo, hi] on the given indices, zero elsewhere.
inline FFunction random_on(Rng& rng, const PrimeField& F, int d, const std::vector<std::uint64_t>& idx,
                           double lo = 1.0, double hi = 2.0) {
    FFunction f(F, d);
    for (auto i : idx) f[i] = random_sim1(rng, lo, hi);
    return f;
}

// Hyperbolic paraboloid for odd d, paraboloid otherwise.
inline SurfacePtr default_surface(const PrimeField& F, int d) {
    return d % 2 == 1 && d >= 3 ? Surface::hyperbolic(F, d) : Surface::paraboloid(F, d);
}

inline Scenario make(std::string id, std::string anchor, Kind kind, std::vector<int> primes, std::vector<int> dims,
                     int trials) {
    Scenario s;
    s.id = std::move(id);
    s.anchor = std::move(anchor);
    s.kind = kind;
    s.primes = std::move(primes);
    s.dims = std::move(dims);
    s.trials = trials;
    if (kind == Kind::constant_tracked) s.metric_name = "measured_constant";
    return s;
}

inline BaselineSpec baseline(const std::string& key, const std::string& oracle, int p, int d, int trials,
                             int version = 1) {
    return BaselineSpec{key, oracle, version, Params{p, d, trials, 20240601}};
}

} // namespace fflab::harness
