#pragma once

#include <optional>
#include <vector>

#include "fflab/combinatorics/pointset.hpp"
#include "fflab/qforms/quadratic.hpp"

namespace fflab {

struct Decomposition {
    std::vector<PointSet> pieces;       // Omega_i
    std::vector<Subspace> containers;   // affine subspace holding each piece
    PointSet uniform;                   // E_u
};

// Greedy removal of c-dim affine subspaces holding >= |E|^rho points. With isotropic_only the
// candidates are cosets of maximal totally isotropic subspaces of Q (c is then ignored).
Decomposition greedy_decompose(const PointSet& E, int c, double rho, bool isotropic_only,
                               const std::optional<QuadraticSpace>& Q = std::nullopt);

// Largest |E cap W| over affine W that are cosets of the given linear subspaces.
int max_coset_count(const PointSet& E, const std::vector<Subspace>& linear);

// VH plane in F^3: type 1 is {x2 = a t + b}, type 2 is {x1 = a t + b}.
struct VHPlane {
    int type, a, b;
    bool contains(const PrimeField& F, const FFVector& x) const;
    auto operator<=>(const VHPlane&) const = default;
};
std::vector<VHPlane> all_vh_planes(const PrimeField& F);

struct PlanarCover {
    std::vector<VHPlane> planes;
    PointSet residual;
};
PlanarCover planar_entropy_cover(const PointSet& E, int budget);
// Greedy cover until nothing is left; planes.size() is the greedy cover number.
PlanarCover greedy_full_cover(const PointSet& E);
// Exact minimum number of VH planes covering E (exhaustive; small E only).
int min_vh_cover(const PointSet& E);
// log_p of the greedy cover number.
double planar_entropy_greedy(const PointSet& E);

} // namespace fflab
