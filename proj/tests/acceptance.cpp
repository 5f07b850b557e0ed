// Acceptance driver: one PASS/FAIL line per criterion, exit status 1 on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "fflab/harness/runner.hpp"

using namespace fflab;
using namespace fflab::harness;

namespace {

struct Run {
    std::string id;
    int prime, dim, trials;
};

struct Result {
    bool ok = true;
    std::string detail;
    double seconds = 0;
};

class Clock {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// Runs every combination; records the worst metric and the first failure.
Result run_all(const std::vector<Run>& runs, const BaselineStore& store) {
    Result res;
    Clock clock;
    double worst = 0;
    for (const auto& r : runs) {
        auto rep = run_scenario(r.id, {r.prime, r.dim, r.trials, 1}, store);
        if (rep.metric) worst = std::max(worst, *rep.metric);
        if (rep.status != Status::pass && res.ok) {
            res.ok = false;
            res.detail = r.id + " p=" + std::to_string(r.prime) + " d=" + std::to_string(r.dim) + " status " +
                         to_string(rep.status) + (rep.metric ? " metric " + fmt(*rep.metric) : "") +
                         (rep.note.empty() ? "" : " (" + rep.note + ")");
        }
    }
    res.seconds = clock.seconds();
    if (res.ok) res.detail = "worst metric " + fmt(worst);
    return res;
}

Result runs_for(const std::string& id, std::vector<int> primes, std::vector<int> dims, int trials,
                const BaselineStore& store) {
    std::vector<Run> runs;
    for (int p : primes)
        for (int d : dims) runs.push_back({id, p, d, trials});
    return run_all(runs, store);
}

int default_trials(const std::string& id) { return find_scenario(id).trials; }

// Re-derives the baseline constants of a scenario and compares them with the committed store.
Result oracle_matches(const std::string& id, const BaselineStore& store) {
    Result res;
    BaselineStore fresh;
    regenerate_baselines(find_scenario(id), fresh);
    for (const auto& [key, e] : fresh.entries()) {
        auto stored = store.get(key);
        if (!stored || std::abs(stored->constant - e.constant) > 1e-9 * std::max(1.0, e.constant)) {
            res.ok = false;
            res.detail = "oracle " + key + " = " + fmt(e.constant) + " differs from the stored baseline";
            return res;
        }
        res.detail += (res.detail.empty() ? "" : ", ") + key + " oracle " + fmt(e.constant);
    }
    return res;
}

Result merge(Result a, const Result& b) {
    if (!a.ok) return a;
    if (!b.ok) return b;
    a.detail += (a.detail.empty() ? "" : "; ") + b.detail;
    a.seconds += b.seconds;
    return a;
}

Result time_limit(Result r, double limit) {
    if (r.ok && r.seconds >= limit) {
        r.ok = false;
        r.detail = "took " + fmt(r.seconds) + " s, limit " + fmt(limit) + " s";
    } else {
        r.detail += "; " + fmt(r.seconds) + " s";
    }
    return r;
}

std::string sweep_text(const SweepSpec& spec, const BaselineStore& store) {
    auto doc = report_document(sweep(spec, store));
    for (auto& r : doc["reports"]) r.erase("runtime_ms");
    std::ostringstream csv;
    for (const auto& r : sweep(spec, store)) {
        auto row = csv_row(r);
        csv << row.substr(0, row.rfind(',')) << '\n';
    }
    return doc.dump(2) + "\n" + csv.str();
}

}  // namespace

int main() {
    auto store = BaselineStore::load(default_baseline_path());
    int failed = 0;
    auto report = [&](int n, const std::string& name, const Result& r) {
        std::printf("%s  %2d. %s: %s\n", r.ok ? "PASS" : "FAIL", n, name.c_str(), r.detail.c_str());
        std::fflush(stdout);
        failed += !r.ok;
    };
    auto guarded = [&](int n, const std::string& name, auto&& body) {
        try {
            report(n, name, body());
        } catch (const std::exception& e) {
            report(n, name, Result{false, std::string("exception: ") + e.what(), 0});
        }
    };

    try {
        store.verify();
    } catch (const std::exception& e) {
        std::printf("baseline store does not verify: %s\n", e.what());
        return 1;
    }

    guarded(1, "transform closed forms on both quadrics", [&] {
        std::vector<Run> runs;
        for (const char* id : {"FT-1", "FT-2"}) {
            for (int p : {3, 5, 7}) runs.push_back({id, p, 3, 1});
            runs.push_back({id, 3, 5, 1});
        }
        return time_limit(run_all(runs, store), 30.0);
    });
    guarded(2, "L2 extension constant against power iteration",
            [&] { return runs_for("ST-3", {3, 5}, {3}, 1, store); });
    guarded(3, "additive energy by Fourier identity", [&] {
        auto r = runs_for("EN-1", {3, 5, 7}, {3}, 200, store);
        auto rep = run_scenario("EN-1", {3, 3, 200, 1}, store);
        if (r.ok && rep.details.value("surface_subsets", 0) != 512) {
            r.ok = false;
            r.detail = "surface subsets were not enumerated";
        }
        return r;
    });
    guarded(4, "energy constants tracked against exhaustive oracles", [&] {
        auto r = merge(oracle_matches("EN-2", store), oracle_matches("EN-3", store));
        r = merge(r, runs_for("EN-2", {5, 7}, {3}, default_trials("EN-2"), store));
        return merge(r, runs_for("EN-3", {5, 7}, {3}, default_trials("EN-3"), store));
    });
    guarded(5, "Bochner-Riesz line identity", [&] { return runs_for("BR-1", {5}, {3}, 1, store); });
    guarded(6, "pseudo-conformal modulus identity", [&] { return runs_for("MT-1", {5}, {3}, 100, store); });
    guarded(7, "planar transform identity", [&] { return runs_for("PL-1", {5}, {3}, 100, store); });
    guarded(8, "Witt index classification", [&] { return runs_for("QF-1", {3, 5, 7}, {2, 4}, 1, store); });
    guarded(9, "complementary isotropic dual bases", [&] { return runs_for("QF-2", {3, 5, 7}, {2, 4}, 100, store); });
    guarded(10, "restriction to Kakeya embedding", [&] { return runs_for("KK-3", {3, 5}, {3}, 100, store); });
    guarded(11, "Kakeya maximal constant tracked against the exhaustive oracle", [&] {
        Clock clock;
        auto r = merge(oracle_matches("KK-1", store),
                       runs_for("KK-1", {5, 7, 11, 13}, {2}, default_trials("KK-1"), store));
        r.seconds = clock.seconds();
        return time_limit(r, 300.0);
    });
    guarded(12, "extension in isotropic coordinates", [&] { return runs_for("MX-1", {5}, {3}, 10, store); });
    guarded(13, "energy exponents and recursion", [&] {
        return merge(runs_for("EX-1", {3}, {3}, 1, store), runs_for("EX-2", {3}, {5}, 1, store));
    });
    guarded(14, "exponent table", [&] { return runs_for("MAIN-1", {3}, {3}, 1, store); });
    guarded(15, "repeated sweeps are identical", [&] {
        SweepSpec spec{{"FT-1", "EN-1", "EN-2", "EN-3", "KK-1", "KK-4", "QF-2", "QF-4", "ST-1"}, {3, 5}, {}, 0, 20240601};
        Result r;
        auto a = sweep_text(spec, store), b = sweep_text(spec, store);
        r.ok = a == b;
        r.detail = r.ok ? std::to_string(a.size()) + " bytes identical" : "sweep outputs differ";
        return r;
    });

    std::printf("%d of 15 criteria failed\n", failed);
    return failed ? 1 : 0;
}
