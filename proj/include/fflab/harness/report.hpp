#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "fflab/ff/field.hpp"

namespace fflab::harness {

using json = nlohmann::ordered_json;

enum class Kind { exact_identity, constant_tracked, exponent_arith, report_only };
enum class Status { pass, fail, report_only };

const char* to_string(Kind k);
const char* to_string(Status s);

struct Params {
    int prime = 3;
    int dim = 3;
    int trials = 1;
    std::uint64_t seed = 1;
};

struct ScenarioReport {
    std::string id;
    std::string anchor;
    Kind kind = Kind::report_only;
    Params params;
    Status status = Status::report_only;
    std::string metric_name;
    std::optional<double> metric;      // empty when not finite
    std::optional<double> threshold;   // pass iff metric <= threshold (>= for lower bounds)
    std::optional<std::string> baseline_key;
    std::optional<double> baseline;
    json details = json::object();
    std::optional<std::string> witness;  // base64, little-endian float64 (re, im) pairs
    std::string note;
    double runtime_ms = 0.0;
};

json to_json(const ScenarioReport& r);
std::string csv_header();
std::string csv_row(const ScenarioReport& r);

std::string base64_encode(const std::vector<unsigned char>& bytes);
std::vector<unsigned char> base64_decode(const std::string& text);
std::string encode_witness(const std::vector<cd>& v);
std::vector<cd> decode_witness(const std::string& text);

// Report array plus summary counts.
json report_document(const std::vector<ScenarioReport>& reports);

} // namespace fflab::harness
