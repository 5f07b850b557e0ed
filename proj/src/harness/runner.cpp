#include "fflab/harness/runner.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>

namespace fflab::harness {

namespace {

void decide(const Scenario& s, const Outcome& o, const BaselineStore& store, ScenarioReport& r) {
    if (std::isfinite(o.metric)) r.metric = o.metric;
    if (!o.applicable) {
        r.status = Status::report_only;
        r.note = "not applicable: " + o.note;
        r.metric.reset();
        return;
    }
    r.note = o.note;
    bool ok = false;
    switch (s.kind) {
    case Kind::report_only:
        r.status = Status::report_only;
        return;
    case Kind::exact_identity:
    case Kind::exponent_arith:
        r.threshold = s.tolerance;
        ok = std::isfinite(o.metric) && o.metric <= s.tolerance;
        break;
    case Kind::constant_tracked: {
        const BaselineSpec* spec = s.baseline_for(r.params.dim);
        if (!spec) {
            r.status = Status::fail;
            r.note = "no baseline is defined for dim " + std::to_string(r.params.dim);
            break;
        }
        r.baseline_key = spec->key;
        auto e = store.get(spec->key);
        if (!e) {
            r.status = Status::fail;
            r.note = "baseline '" + spec->key + "' missing; run `fflab baseline --regen --ids " + s.id + "`";
            break;
        }
        r.baseline = e->constant;
        if (s.lower_bound) {
            r.threshold = e->constant / kSlack;
            ok = std::isfinite(o.metric) && o.metric >= *r.threshold;
        } else {
            r.threshold = e->constant * kSlack;
            ok = std::isfinite(o.metric) && o.metric <= *r.threshold * (1.0 + 1e-12);
        }
        r.status = ok ? Status::pass : Status::fail;
        break;
    }
    }
    if (s.kind != Kind::constant_tracked) r.status = ok ? Status::pass : Status::fail;
    if (r.status == Status::fail) r.witness = encode_witness(o.witness.empty() ? std::vector<cd>{cd(o.metric, 0)} : o.witness);
}

}  // namespace

ScenarioReport run_scenario(const std::string& id, const Params& params, const BaselineStore& store) {
    const Scenario& s = find_scenario(id);
    if (params.trials < 1) throw ConfigError("trials must be positive");
    if (!is_prime(params.prime) || params.prime == 2)
        throw ConfigError("prime must be an odd prime (got " + std::to_string(params.prime) + ")");
    ScenarioReport r;
    r.id = s.id;
    r.anchor = s.anchor;
    r.kind = s.kind;
    r.params = params;
    r.metric_name = s.metric_name;
    auto t0 = std::chrono::steady_clock::now();
    Context c{s.id, params, false};
    Outcome o = s.run(c);
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    r.details = o.details;
    decide(s, o, store, r);
    return r;
}

std::vector<ScenarioReport> sweep(const SweepSpec& spec, const BaselineStore& store) {
    std::vector<ScenarioReport> out;
    for (const auto& id : spec.ids) {
        const Scenario& s = find_scenario(id);
        const auto& primes = spec.primes.empty() ? s.primes : spec.primes;
        const auto& dims = spec.dims.empty() ? s.dims : spec.dims;
        for (int d : dims)
            for (int p : primes) {
                Params pr{p, d, spec.trials > 0 ? spec.trials : s.trials, spec.seed};
                out.push_back(run_scenario(id, pr, store));
            }
    }
    return out;
}

void write_sweep(const std::vector<ScenarioReport>& reports, const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw ConfigError("cannot create output directory " + dir + ": " + ec.message());
    std::string jpath = dir + "/report.json", cpath = dir + "/summary.csv";
    std::ofstream js(jpath);
    if (!js) throw ConfigError("cannot write " + jpath);
    js << report_document(reports).dump(2) << '\n';
    std::ofstream cs(cpath);
    if (!cs) throw ConfigError("cannot write " + cpath);
    cs << csv_header() << '\n';
    for (const auto& r : reports) cs << csv_row(r) << '\n';
}

bool any_failed(const std::vector<ScenarioReport>& reports) {
    for (const auto& r : reports)
        if (r.status == Status::fail) return true;
    return false;
}

} // namespace fflab::harness
