#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "fflab/ff/field.hpp"

namespace fflab {

// Fixed hash of (master seed, scenario id, trial); trial order never matters.
std::uint64_t derive_seed(std::uint64_t master, std::string_view id, std::uint64_t trial);

std::uint64_t fnv1a64(std::string_view s, std::uint64_t h = 14695981039346656037ull);

// mt19937_64 with hand-rolled reductions so sequences are identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next() { return eng_(); }
    int below(int n) { return int(eng_() % std::uint64_t(n)); }
    double unit() { return double(eng_() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * unit(); }
    bool coin(double prob) { return unit() < prob; }
    cd complex_unit_box() { double re = uniform(-1, 1); return cd(re, uniform(-1, 1)); }
    cd phase(const CharacterTable& chi) { return chi(below(chi.p())); }
    FFVector vec(int p, int d) {
        FFVector v(d);
        for (auto& c : v) c = below(p);
        return v;
    }
    // Fisher-Yates on [0, n), first k entries.
    std::vector<std::uint64_t> sample(std::uint64_t n, std::uint64_t k);

private:
    std::mt19937_64 eng_;
};

} // namespace fflab
