#include "fflab/harness/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>

namespace fflab::harness {

const char* to_string(Kind k) {
    switch (k) {
    case Kind::exact_identity: return "exact_identity";
    case Kind::constant_tracked: return "constant_tracked";
    case Kind::exponent_arith: return "exponent_arith";
    case Kind::report_only: return "report_only";
    }
    return "?";
}

const char* to_string(Status s) {
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::report_only: return "report_only";
    }
    return "?";
}

json to_json(const ScenarioReport& r) {
    json j;
    j["scenario"] = r.id;
    j["anchor"] = r.anchor;
    j["kind"] = to_string(r.kind);
    j["params"] = {{"prime", r.params.prime}, {"dim", r.params.dim}, {"trials", r.params.trials}};
    j["seed"] = r.params.seed;
    j["status"] = to_string(r.status);
    j["metric_name"] = r.metric_name;
    j["metric"] = r.metric ? json(*r.metric) : json(nullptr);
    j["threshold"] = r.threshold ? json(*r.threshold) : json(nullptr);
    j["baseline_key"] = r.baseline_key ? json(*r.baseline_key) : json(nullptr);
    j["baseline"] = r.baseline ? json(*r.baseline) : json(nullptr);
    j["details"] = r.details;
    if (r.witness) j["witness"] = *r.witness;
    if (!r.note.empty()) j["note"] = r.note;
    j["runtime_ms"] = std::round(r.runtime_ms * 1000.0) / 1000.0;
    return j;
}

std::string csv_header() { return "scenario,prime,dim,trials,seed,status,metric,runtime_ms"; }

std::string csv_row(const ScenarioReport& r) {
    char metric[64] = "";
    if (r.metric) std::snprintf(metric, sizeof metric, "%.17g", *r.metric);
    char buf[512];
    std::snprintf(buf, sizeof buf, "%s,%d,%d,%d,%llu,%s,%s,%.3f", r.id.c_str(), r.params.prime, r.params.dim,
                  r.params.trials, (unsigned long long)r.params.seed, to_string(r.status), metric, r.runtime_ms);
    return buf;
}

namespace {
const char* kAlphabet = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
}

std::string base64_encode(const std::vector<unsigned char>& in) {
    std::string out;
    out.reserve((in.size() + 2) / 3 * 4);
    size_t i = 0;
    for (; i + 2 < in.size(); i += 3) {
        unsigned v = (in[i] << 16) | (in[i + 1] << 8) | in[i + 2];
        out += kAlphabet[(v >> 18) & 63];
        out += kAlphabet[(v >> 12) & 63];
        out += kAlphabet[(v >> 6) & 63];
        out += kAlphabet[v & 63];
    }
    if (i + 1 == in.size()) {
        unsigned v = in[i] << 16;
        out += kAlphabet[(v >> 18) & 63];
        out += kAlphabet[(v >> 12) & 63];
        out += "==";
    } else if (i + 2 == in.size()) {
        unsigned v = (in[i] << 16) | (in[i + 1] << 8);
        out += kAlphabet[(v >> 18) & 63];
        out += kAlphabet[(v >> 12) & 63];
        out += kAlphabet[(v >> 6) & 63];
        out += '=';
    }
    return out;
}

std::vector<unsigned char> base64_decode(const std::string& text) {
    int rev[256];
    std::fill(rev, rev + 256, -1);
    for (int k = 0; k < 64; ++k) rev[(unsigned char)kAlphabet[k]] = k;
    std::vector<unsigned char> out;
    unsigned acc = 0;
    int bits = 0;
    for (char c : text) {
        if (c == '=') break;
        int v = rev[(unsigned char)c];
        if (v < 0) throw ConfigError("invalid base64 character");
        acc = (acc << 6) | unsigned(v);
        bits += 6;
        if (bits >= 8) {
            bits -= 8;
            out.push_back((acc >> bits) & 0xff);
        }
    }
    return out;
}

namespace {

void put_le(double x, std::vector<unsigned char>& out) {
    std::uint64_t u;
    std::memcpy(&u, &x, 8);
    for (int b = 0; b < 8; ++b) out.push_back((u >> (8 * b)) & 0xff);
}

double get_le(const unsigned char* p) {
    std::uint64_t u = 0;
    for (int b = 0; b < 8; ++b) u |= std::uint64_t(p[b]) << (8 * b);
    double x;
    std::memcpy(&x, &u, 8);
    return x;
}

}  // namespace

std::string encode_witness(const std::vector<cd>& v) {
    std::vector<unsigned char> bytes;
    bytes.reserve(v.size() * 16);
    for (const auto& z : v) {
        put_le(z.real(), bytes);
        put_le(z.imag(), bytes);
    }
    return base64_encode(bytes);
}

std::vector<cd> decode_witness(const std::string& text) {
    auto bytes = base64_decode(text);
    if (bytes.size() % 16) throw ConfigError("witness length is not a whole number of complex values");
    std::vector<cd> out(bytes.size() / 16);
    for (size_t i = 0; i < out.size(); ++i) out[i] = cd(get_le(&bytes[16 * i]), get_le(&bytes[16 * i + 8]));
    return out;
}

json report_document(const std::vector<ScenarioReport>& reports) {
    json doc;
    doc["schema"] = "fflab-report/1";
    json arr = json::array();
    int np = 0, nf = 0, nr = 0;
    for (const auto& r : reports) {
        arr.push_back(to_json(r));
        if (r.status == Status::pass) ++np;
        else if (r.status == Status::fail) ++nf;
        else ++nr;
    }
    doc["reports"] = arr;
    doc["summary"] = {{"total", reports.size()}, {"pass", np}, {"fail", nf}, {"report_only", nr}};
    return doc;
}

} // namespace fflab::harness
