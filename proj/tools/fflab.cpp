// fflab: list, run, sweep and baseline the scenario registry.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fflab/harness/runner.hpp"

using namespace fflab;
using namespace fflab::harness;

namespace {

std::vector<std::string> split_ids(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<int> split_ints(const std::string& csv) {
    std::vector<int> out;
    for (const auto& s : split_ids(csv)) {
        try {
            out.push_back(std::stoi(s));
        } catch (const std::exception&) {
            throw ConfigError("not an integer: '" + s + "'");
        }
    }
    return out;
}

void print_summary(const std::vector<ScenarioReport>& reports) {
    for (const auto& r : reports) {
        char metric[32] = "n/a";
        if (r.metric) std::snprintf(metric, sizeof metric, "%.6g", *r.metric);
        std::printf("%-7s p=%-3d d=%-2d %-11s %s=%s\n", r.id.c_str(), r.params.prime, r.params.dim,
                    to_string(r.status), r.metric_name.c_str(), metric);
        if (!r.note.empty()) std::printf("        %s\n", r.note.c_str());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite field restriction lab"};
    app.require_subcommand(1);
    std::string baseline_path = default_baseline_path();
    app.add_option("--baselines", baseline_path, "baseline file");

    auto* list = app.add_subcommand("list", "list registered scenarios");

    std::string id, out;
    Params params;
    std::uint64_t seed = 1;
    auto* run = app.add_subcommand("run", "run one scenario");
    run->add_option("--scenario", id, "scenario id, see `fflab list`")->required();
    auto* o_prime = run->add_option("--prime", params.prime, "default: the scenario's first prime");
    auto* o_dim = run->add_option("--dim", params.dim, "default: the scenario's first dimension");
    auto* o_trials = run->add_option("--trials", params.trials, "default: the scenario's trial count");
    run->add_option("--seed", seed, "base seed")->capture_default_str();
    run->add_option("--out", out, "report JSON path");

    std::string ids, primes, dims, out_dir = "fflab-out";
    int trials = 0;
    auto* sw = app.add_subcommand("sweep", "run the cross product of ids, primes and dims");
    sw->add_option("--ids", ids, "comma separated scenario ids; empty means every scenario");
    sw->add_option("--primes", primes, "comma separated odd primes; empty keeps each scenario's default");
    sw->add_option("--dims", dims, "comma separated dimensions; empty keeps each scenario's default");
    sw->add_option("--trials", trials, "0 keeps each scenario's default");
    sw->add_option("--seed", seed, "base seed")->capture_default_str();
    sw->add_option("--out-dir", out_dir, "directory for report.json and summary.csv")->capture_default_str();

    bool regen = false;
    std::string bids;
    auto* bl = app.add_subcommand("baseline", "regenerate baseline constants");
    bl->add_flag("--regen", regen)->required();
    bl->add_option("--ids", bids, "comma separated ids; empty means every tracked scenario");

    auto* table = app.add_subcommand("table", "print the exponent table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*list) {
            for (const auto& s : registry())
                std::printf("%-7s %-16s %s\n", s.id.c_str(), to_string(s.kind), s.anchor.c_str());
            return 0;
        }
        if (*table) {
            std::cout << render_table(exponent_table());
            return 0;
        }
        if (*bl) {
            auto store = BaselineStore::load(baseline_path);
            std::vector<std::string> targets = split_ids(bids);
            if (targets.empty())
                for (const auto& s : registry())
                    if (!s.baselines.empty()) targets.push_back(s.id);
            for (const auto& t : targets) {
                const auto& s = find_scenario(t);
                if (s.baselines.empty()) throw ConfigError("scenario " + t + " has no baseline");
                regenerate_baselines(s, store);
                for (const auto& b : s.baselines)
                    std::printf("%-10s %.17g\n", b.key.c_str(), store.get(b.key)->constant);
            }
            store.save(baseline_path);
            return 0;
        }
        auto store = BaselineStore::load(baseline_path);
        store.verify();
        if (*run) {
            const auto& s = find_scenario(id);
            if (!*o_prime) params.prime = s.primes.front();
            if (!*o_dim) params.dim = s.dims.front();
            if (!*o_trials) params.trials = s.trials;
            params.seed = seed;
            auto r = run_scenario(id, params, store);
            std::vector<ScenarioReport> reports{r};
            if (!out.empty()) {
                std::ofstream os(out);
                if (!os) throw ConfigError("cannot write " + out);
                os << report_document(reports).dump(2) << '\n';
            }
            print_summary(reports);
            return any_failed(reports) ? 1 : 0;
        }
        if (*sw) {
            SweepSpec spec{split_ids(ids), split_ints(primes), split_ints(dims), trials, seed};
            if (spec.ids.empty())
                for (const auto& s : registry()) spec.ids.push_back(s.id);
            auto reports = sweep(spec, store);
            write_sweep(reports, out_dir);
            print_summary(reports);
            return any_failed(reports) ? 1 : 0;
        }
    } catch (const UnknownScenario& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 2;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 2;
    } catch (const SizeOverflow& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 2;
    } catch (const Error& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 2;
    }
    return 0;
}
