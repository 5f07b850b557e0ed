#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fflab/surfaces/surface.hpp"

namespace fflab {

// Linear map between weighted l^r spaces; adjoint is taken for the weighted pairings
// <u, v> = w sum u conj(v) on each side.
struct LinearOp {
    std::function<std::vector<cd>(const std::vector<cd>&)> apply;
    std::function<std::vector<cd>(const std::vector<cd>&)> adjoint;
    double w_in;
    double w_out;
};

struct BoydResult {
    double ratio;            // best ||Ax||_p / ||x||_q seen (a lower bound on the norm)
    std::vector<cd> argmax;
    int iterations;
};

// ||A x||_{p, w_out} / ||x||_{q, w_in}
double op_ratio(const LinearOp& A, const std::vector<cd>& x, double q, double p);
// Nonlinear power iteration x <- psi_{q'}(A* psi_p(A x)); 1 < q, p < inf.
BoydResult boyd_iterate(const LinearOp& A, std::vector<cd> x0, double q, double p, int iters, double tol = 1e-12);

// (p^d / |S|)^{1/2}
double exact_r22(const Surface& S);

struct PowerResult {
    double value;
    int iterations;
};
// Dominant singular value of the extension operator L^2(dsigma) -> L^2(dx).
PowerResult power_iteration_r22(const SurfacePtr& S, int max_iter, double tol, std::uint64_t seed);

LinearOp extension_op(const SurfacePtr& S);
// ||ext g||_{L^p(dx)} / ||g||_{L^q(dsigma)}
double extension_ratio(const SurfaceFunction& g, double q, double p);

struct NormLowerBound {
    double value;
    std::string source;  // candidate family that attained it
    std::vector<cd> witness;
};
// Lower bound for R*(q -> p): structured candidates, then Boyd iteration from each
// candidate and from `restarts` random starts.
NormLowerBound r_star_lower_bound(const SurfacePtr& S, double q, double p, int restarts, int iters,
                                  std::uint64_t seed);

} // namespace fflab
