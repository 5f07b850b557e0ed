#pragma once

#include <vector>

#include "fflab/ff/ffunction.hpp"
#include "fflab/surfaces/surface.hpp"

namespace fflab {

// Sorted, deduplicated points of F_p^d.
class PointSet {
public:
    PointSet(const PrimeField& F, int d) : F_(F), d_(d) {}
    PointSet(const PrimeField& F, int d, std::vector<FFVector> pts);

    const PrimeField& field() const { return F_; }
    int dim() const { return d_; }
    std::size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }
    const std::vector<FFVector>& points() const { return pts_; }
    const FFVector& operator[](std::size_t i) const { return pts_[i]; }
    bool contains(const FFVector& x) const;
    // 0/1 function on F_p^d.
    FFunction indicator() const;
    // Dense membership bitmap indexed by encode().
    std::vector<char> bitmap() const;

private:
    PrimeField F_;
    int d_;
    std::vector<FFVector> pts_;
};

// {(xi, Q(xi))} for the given parameters.
PointSet lift_to_surface(const Surface& S, const std::vector<FFVector>& params);
// First d-1 coordinates; NotOnSurface if a point is off S.
std::vector<FFVector> surface_params(const Surface& S, const PointSet& E);
// Surface function equal to `values` on E and 0 elsewhere.
SurfaceFunction surface_function_on(const SurfacePtr& S, const PointSet& E, const std::vector<cd>& values);

} // namespace fflab
