#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fflab/combinatorics/pointset.hpp"

namespace fflab {

// {y : normal . y = offset}; normal scaled so its first nonzero entry is 1.
// A zero normal with zero offset stands for the whole space.
struct Hyperplane {
    FFVector normal;
    int offset;
    bool contains(const PrimeField& F, const FFVector& y) const;
    auto operator<=>(const Hyperplane&) const = default;
};

Hyperplane make_hyperplane(const PrimeField& F, FFVector normal, int offset);

// Multiset of hyperplanes with multiplicities.
struct HyperplaneFamily {
    std::map<Hyperplane, int> items;
    std::uint64_t total() const;
    int max_multiplicity() const;
    void add(const Hyperplane& h, int mult = 1) { items[h] += mult; }
};

// H(x) = {y : x o y = x o x} for x a parameter point.
Hyperplane surface_hyperplane(const QuadraticSpace& Q, const FFVector& x);

std::uint64_t incidence_count(const PointSet& P, const HyperplaneFamily& L);

struct DoubleCount {
    std::uint64_t incidences;
    int C1;  // max |l cap l' cap P| over distinct l, l'
    int C2;  // max multiplicity
    double bound;  // C1^{1/2} |P|^{1/2} |L| + C2 |P|
};
DoubleCount doublecount(const PointSet& P, const HyperplaneFamily& L);

struct EnergyIncidence {
    FFVector b;          // parameter of the element of B sent to 0
    std::vector<FFVector> A_shift, B_shift;  // parameters after the Galilean map
    HyperplaneFamily L;  // H(d) for d in B'
    PointSet P;          // A' parameters
    std::uint64_t energy;
    std::uint64_t incidences;
    double ratio;        // energy / (|L| |I|)
};
// A, B given by surface parameters.
EnergyIncidence energy_to_incidence(const Surface& S, const std::vector<FFVector>& A,
                                    const std::vector<FFVector>& B);

// All lines of F_p^2 as hyperplanes.
std::vector<Hyperplane> all_lines_f2(const PrimeField& F);

} // namespace fflab
