#pragma once

#include <optional>
#include <vector>

#include "fflab/fourier/opnorm.hpp"
#include "fflab/surfaces/surface.hpp"

namespace fflab {

// {(b + eta t, t) : t in F}, b and eta in F^{m-1}.
struct AffineLine {
    FFVector b, eta;
    std::vector<FFVector> points(const PrimeField& F) const;
};

struct MaximalResult {
    std::vector<double> value;       // F*(eta), indexed by encode(eta)
    std::vector<FFVector> argmax;    // lowest-index maximizing base
};
// F*(eta) = max_b sum_{x in l(b, eta)} |F(x)|
MaximalResult kakeya_maximal(const FFunction& F);
// ||F*||_{L^r(dtheta)} / ||F||_{L^r(dx)}; r defaults to m.
double eot_ratio(const FFunction& F, double r = 0.0);

// p^{-(m-1)} sum_v h(v) 1_{l(x0(v), v)}
FFunction dual_kakeya_apply(const std::vector<cd>& h, const std::vector<FFVector>& x0, const PrimeField& F, int m);
// F -> (sum over l(x0(v), v) of F)_v with dx on the input and dtheta on the output; the adjoint
// for these pairings is dual_kakeya_apply.
LinearOp line_sum_op(const PrimeField& F, int m, std::vector<FFVector> x0);

struct DualityResult {
    double maximal_ratio;  // ||F*||_{L^r(dtheta)} / ||F||_{L^r(dx)}
    double dual_ratio;     // ||D h||_{L^{r'}(dx)} / ||h||_{L^{r'}(dtheta)}
    double gap;
    int rounds;
    std::vector<FFVector> x0;
};
// Alternates Boyd iteration for fixed bases with re-selection of maximizing bases; both
// ratios are lower bounds for the same operator norm. r = 2m - 1 by default.
DualityResult kakeya_duality(const PrimeField& F, int m, double r, std::uint64_t seed, int rounds = 40);

// f(xi, theta) = h^{1/2}(theta) e(-b(-theta).xi) on the (2n+1)-dim hyperbolic paraboloid.
SurfaceFunction restriction_to_kakeya_embed(const std::vector<double>& h, const std::vector<FFVector>& b,
                                            const SurfacePtr& H);
// p^{-n} sum_theta h^{1/2}(theta) 1_{l(b(-theta), -theta)}(x1, t) e(theta.x2)
FFunction embed_closed_form(const std::vector<double>& h, const std::vector<FFVector>& b, const SurfacePtr& H);

struct EmbedCheck {
    double closed_form_dev;   // max |ext f - closed form|
    double collapse_dev;      // max | ||ext f||_{L^2_{x2}} - (D h~)^{1/2} |
    double dual_ratio;        // ||D h~||_{L^p(dx)} / ||h~||_{L^q(dtheta)}, h~(v) = h(-v), x0 = b
    double ext_ratio;         // ||ext f||_{L^{2p}(dx)} / ||f||_{L^{2q}(dsigma)}
    double chain_rhs;         // p^{(m-1)(1-1/p)} ext_ratio^2
    bool chain_ok;
};
EmbedCheck restriction_to_kakeya_check(const std::vector<double>& h, const std::vector<FFVector>& b,
                                       const SurfacePtr& H, double q, double p);

// Reparameterized extension over complementary isotropic W, V of F^{2n}.
FFunction coset_extension(const SurfaceFunction& f, const Subspace& W, const Subspace& V);

// x = x1 + x2 with x1 in X1, x2 in X2 (complementary); coefficient-free split.
std::pair<FFVector, FFVector> split_complementary(const Subspace& X1, const Subspace& X2, const FFVector& x);

// Projective directions of F^m: last nonzero coordinate equal to 1.
std::vector<FFVector> all_directions(const PrimeField& F, int m);

struct KakeyaInstance {
    int m;
    std::vector<char> member;  // bitmap over F^m
    // Optional witness: direction -> a point on a contained line.
    std::vector<std::pair<FFVector, FFVector>> witness;
};

struct KakeyaAudit {
    bool is_kakeya;
    double density;
    int missing_directions;
};
KakeyaAudit kakeya_set_audit(const PrimeField& F, const KakeyaInstance& K);

enum class KakeyaConstruction { full, quadratic, random, local_search };
const char* to_string(KakeyaConstruction c);
KakeyaInstance build_kakeya(const PrimeField& F, int m, KakeyaConstruction c, std::uint64_t seed);
// Minimum density over every choice of one line per direction (p^m small).
double exhaustive_min_kakeya_density(const PrimeField& F, int m);

} // namespace fflab
