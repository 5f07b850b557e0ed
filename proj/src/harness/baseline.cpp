#include "fflab/harness/baseline.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "fflab/ff/random.hpp"

#ifndef FFLAB_BASELINE_PATH
#define FFLAB_BASELINE_PATH "baselines/baselines.json"
#endif

namespace fflab::harness {

std::string oracle_hash(const std::string& key, const BaselineSpec& spec) {
    std::ostringstream os;
    os << key << '|' << spec.oracle << '|' << spec.version << '|' << spec.params.prime << ',' << spec.params.dim
       << ',' << spec.params.trials << ',' << spec.params.seed;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)fnv1a64(os.str()));
    return buf;
}

std::string default_baseline_path() { return FFLAB_BASELINE_PATH; }

BaselineStore BaselineStore::load(const std::string& path) {
    BaselineStore s;
    std::ifstream in(path);
    if (!in) return s;
    json doc;
    try {
        doc = json::parse(in);
    } catch (const std::exception& e) {
        throw ConfigError("cannot parse baseline file " + path + ": " + e.what());
    }
    for (auto& [key, v] : doc.at("entries").items()) {
        BaselineEntry e;
        e.constant = v.at("constant").get<double>();
        e.oracle = v.at("oracle").get<std::string>();
        e.version = v.at("version").get<int>();
        const auto& p = v.at("params");
        e.params.prime = p.at("prime").get<int>();
        e.params.dim = p.at("dim").get<int>();
        e.params.trials = p.at("trials").get<int>();
        e.params.seed = p.at("seed").get<std::uint64_t>();
        e.hash = v.at("hash").get<std::string>();
        s.entries_[key] = e;
    }
    return s;
}

void BaselineStore::save(const std::string& path) const {
    json doc;
    doc["schema"] = "fflab-baselines/1";
    doc["slack"] = kSlack;
    json entries = json::object();
    for (const auto& [key, e] : entries_) {
        entries[key] = {{"constant", e.constant},
                        {"oracle", e.oracle},
                        {"version", e.version},
                        {"params",
                         {{"prime", e.params.prime},
                          {"dim", e.params.dim},
                          {"trials", e.params.trials},
                          {"seed", e.params.seed}}},
                        {"hash", e.hash}};
    }
    doc["entries"] = entries;
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write baseline file " + path);
    out << doc.dump(2) << '\n';
}

void BaselineStore::verify() const {
    for (const auto& [key, e] : entries_) {
        const BaselineSpec* spec = nullptr;
        for (const auto& s : registry())
            for (const auto& b : s.baselines)
                if (b.key == key) spec = &b;
        if (!spec) throw ConfigError("baseline entry '" + key + "' has no registered oracle");
        std::string h = oracle_hash(key, *spec);
        if (h != e.hash)
            throw ConfigError("oracle hash mismatch for baseline '" + key + "' (stored " + e.hash + ", expected " +
                              h + "); regenerate with `fflab baseline --regen --ids " +
                              key.substr(0, key.find('/')) + "`");
    }
}

std::optional<BaselineEntry> BaselineStore::get(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void regenerate_baselines(const Scenario& s, BaselineStore& store) {
    for (const auto& b : s.baselines) {
        Context c{s.id, b.params, true};
        Outcome o = s.run(c);
        if (!o.applicable) throw ConfigError("oracle parameters for '" + b.key + "' are not applicable: " + o.note);
        BaselineEntry e{o.metric, b.oracle, b.version, b.params, oracle_hash(b.key, b)};
        store.set(b.key, e);
    }
}

} // namespace fflab::harness
