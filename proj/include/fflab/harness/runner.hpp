#pragma once

#include <string>
#include <vector>

#include "fflab/harness/baseline.hpp"

namespace fflab::harness {

// Runs one scenario; parameters outside a scenario's domain give a report_only "not applicable".
ScenarioReport run_scenario(const std::string& id, const Params& params, const BaselineStore& store);

struct SweepSpec {
    std::vector<std::string> ids;
    std::vector<int> primes;  // empty: scenario defaults
    std::vector<int> dims;    // empty: scenario defaults
    int trials = 0;           // 0: scenario default
    std::uint64_t seed = 1;
};

std::vector<ScenarioReport> sweep(const SweepSpec& spec, const BaselineStore& store);
// Writes report.json and summary.csv under dir.
void write_sweep(const std::vector<ScenarioReport>& reports, const std::string& dir);

bool any_failed(const std::vector<ScenarioReport>& reports);

struct TableRow {
    std::string label;
    std::string value;
    double numeric;   // value used by the rendering check
    bool measured;    // true for finite-field measurements, false for asymptotic exponents
};
std::vector<TableRow> exponent_table();
std::string render_table(const std::vector<TableRow>& rows);

} // namespace fflab::harness
