#pragma once

#include <cstdint>
#include <vector>

#include "fflab/combinatorics/pointset.hpp"

namespace fflab {

enum class EnergyMethod { quadruple_loop, sum_count, fourier };

// #{(a,b,c,d) : a+b = c+d, a,c in A, b,d in B}
std::uint64_t additive_energy(const PointSet& A, const PointSet& B, EnergyMethod m);
inline std::uint64_t additive_energy(const PointSet& E, EnergyMethod m = EnergyMethod::sum_count) {
    return additive_energy(E, E, m);
}

// Off-diagonal energy on the 3-d hyperbolic paraboloid: a - d = c - b with b1 != d1, b2 != d2.
std::uint64_t energy_star(const PointSet& E);

struct VHProfile {
    std::vector<int> vertical;    // |E_j|, points with x1 = j
    std::vector<int> horizontal;  // |E^k|, points with x2 = k
    int max_line;
};
// E must lie on {x3 = x1 x2}; NotOnSurface otherwise.
VHProfile vh_profile(const PointSet& E);

struct L52Result {
    std::uint64_t energy;
    double bound;  // |E|^{5/2} + sum |E_j|^3 + sum |E^k|^3
    double ratio;
};
L52Result energy_bound_l52(const PointSet& E);

} // namespace fflab
