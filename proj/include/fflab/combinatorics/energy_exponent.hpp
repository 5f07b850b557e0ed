#pragma once

#include <string>
#include <vector>

#include "fflab/ff/random.hpp"
#include "fflab/surfaces/surface.hpp"

namespace fflab {

enum class ExponentKind { dim3_witt1, dim2, rank1_deg, rank2_deg, dim4, dim5_witt2 };

const char* to_string(ExponentKind k);
// [lo, hi] where the closed form is stated.
std::pair<double, double> validity_range(ExponentKind k);
// OutOfValidityRange outside validity_range.
double energy_exponent_closed(ExponentKind k, double alpha);
// Closed form with alpha clamped up to the lower end of the validity range.
double energy_exponent_clamped(ExponentKind k, double alpha);
// theta(alpha) = 3 alpha + Psi(alpha)(1 - alpha)
double degenerate_lift(double psi_alpha, double alpha);

struct EnergyExponent {
    std::vector<double> alpha;
    std::vector<double> psi;
    std::string provenance;  // "closed_form" or "recursion"
    double operator()(double a) const;  // piecewise linear
    bool satisfies_invariants(double tol = 1e-9) const;
};

std::vector<double> uniform_grid(int n);
EnergyExponent exponent_from_closed(ExponentKind k, const std::vector<double>& grid);

struct RecurseResult {
    double value;
    double rho;
    bool root_found;
};
// Solves 5/2 + rho/2 = 4(1 - rho) + Psi(alpha / rho) on [alpha, 1) by bisection; returns (5 + rho)/2.
RecurseResult energy_exponent_recurse(const EnergyExponent& inner, double alpha, double tol = 1e-10);
EnergyExponent recurse_grid(const EnergyExponent& inner, const std::vector<double>& grid);
EnergyExponent degenerate_lift_grid(const EnergyExponent& inner);

struct AlphaEnergySample {
    std::string family;
    std::size_t size;
    double alpha;     // log_{|E|} max |E cap j| over maximal totally isotropic affine j
    double exponent;  // log_{|E|} Lambda(E)
    double curve;     // reference Psi for the surface class
};
// Reference curve used for the scatter check.
double reference_psi(const Surface& S, double alpha);
std::vector<AlphaEnergySample> empirical_alpha_energy(const SurfacePtr& S, int trials, std::uint64_t seed);

} // namespace fflab
