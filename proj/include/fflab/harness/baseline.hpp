#pragma once

#include <map>
#include <optional>
#include <string>

#include "fflab/harness/scenario.hpp"

namespace fflab::harness {

struct BaselineEntry {
    double constant = 0.0;
    std::string oracle;
    int version = 1;
    Params params;
    std::string hash;
};

std::string oracle_hash(const std::string& key, const BaselineSpec& spec);
std::string default_baseline_path();

class BaselineStore {
public:
    static BaselineStore load(const std::string& path);  // missing file gives an empty store
    void save(const std::string& path) const;
    // Recomputes every stored hash from the registry; ConfigError on the first mismatch.
    void verify() const;
    std::optional<BaselineEntry> get(const std::string& key) const;
    void set(const std::string& key, BaselineEntry e) { entries_[key] = std::move(e); }
    const std::map<std::string, BaselineEntry>& entries() const { return entries_; }

private:
    std::map<std::string, BaselineEntry> entries_;
};

// Runs the oracle for every baseline of the scenario and stores the constants.
void regenerate_baselines(const Scenario& s, BaselineStore& store);

} // namespace fflab::harness
