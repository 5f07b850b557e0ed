#pragma once

#include <memory>
#include <vector>

#include "fflab/ff/ffunction.hpp"
#include "fflab/qforms/quadratic.hpp"

namespace fflab {

enum class SurfaceKind { paraboloid, hyperbolic, general };

const char* to_string(SurfaceKind k);

// {(xi, Q(xi)) : xi in F^{d-1}} in F^d, indexed by xi.
class Surface {
public:
    // Q(xi) = xi.xi
    static std::shared_ptr<const Surface> paraboloid(const PrimeField& F, int d);
    // Q(xi1, xi2) = xi1.xi2 with xi1, xi2 in F^n, d = 2n+1.
    static std::shared_ptr<const Surface> hyperbolic(const PrimeField& F, int d);
    static std::shared_ptr<const Surface> general(const QuadraticSpace& Q);

    SurfaceKind kind() const { return kind_; }
    const QuadraticSpace& form() const { return Q_; }
    const PrimeField& field() const { return Q_.field(); }
    int p() const { return Q_.field().p(); }
    int dim() const { return Q_.dim() + 1; }
    int param_dim() const { return Q_.dim(); }
    std::uint64_t size() const { return qvals_.size(); }

    // Q at the parameter with index i.
    int qval(std::uint64_t i) const { return qvals_[i]; }
    const std::vector<int>& qvals() const { return qvals_; }
    // Ambient point (xi, Q(xi)).
    FFVector point(std::uint64_t i) const;
    bool contains(const FFVector& x) const;

private:
    Surface(SurfaceKind kind, QuadraticSpace Q);
    SurfaceKind kind_;
    QuadraticSpace Q_;
    std::vector<int> qvals_;
};

using SurfacePtr = std::shared_ptr<const Surface>;

class SurfaceFunction {
public:
    explicit SurfaceFunction(SurfacePtr S);
    SurfaceFunction(SurfacePtr S, std::vector<cd> values);

    const Surface& surface() const { return *S_; }
    const SurfacePtr& surface_ptr() const { return S_; }
    std::uint64_t size() const { return v_.size(); }
    cd& operator[](std::uint64_t i) { return v_[i]; }
    const cd& operator[](std::uint64_t i) const { return v_[i]; }
    std::vector<cd>& values() { return v_; }
    const std::vector<cd>& values() const { return v_; }

private:
    SurfacePtr S_;
    std::vector<cd> v_;
};

// Norm on (S, dsigma), normalized counting measure.
double surface_norm(const SurfaceFunction& f, double p_exp);
// <f, g>_{dsigma}
cd surface_inner(const SurfaceFunction& f, const SurfaceFunction& g);

// (f dsigma)^vee(x) = p^{-(d-1)} sum_xi f(xi) e(x.(xi, Q(xi))); one DFT per t-slice.
FFunction extension(const SurfaceFunction& f);
FFunction extension_direct(const SurfaceFunction& f);
// F^ sampled on S.
SurfaceFunction restriction(const FFunction& F, SurfacePtr S);

// Sum_{x in F_p} e(t x^2), by summation.
cd gauss_sum(const PrimeField& F, int t);
// The same value from the Legendre symbol and the sign of the quadratic Gauss sum.
cd gauss_sum_closed(const PrimeField& F, int t);

// (dsigma)^vee: closed form for paraboloid / hyperbolic kinds, summed otherwise.
FFunction surface_measure_inverse_ft(const Surface& S);
FFunction surface_measure_closed_form(const Surface& S);
FFunction surface_measure_direct(const Surface& S);

// (f*g)(x) = sum_y f(y) g(x-y)
FFunction convolve_direct(const FFunction& f, const FFunction& g);
FFunction convolve_fourier(const FFunction& f, const FFunction& g);

enum class BRVariant { with_delta, kernel_only };
enum class ConvMethod { direct, fourier };

// F * K with K = (dsigma)^vee - delta_0, or F * (dsigma)^vee for kernel_only.
FFunction bochner_riesz(const FFunction& F, const Surface& S, BRVariant v,
                        ConvMethod method = ConvMethod::fourier);

// J_m(x1, x2 - x2', t - t') on F_p^3.
FFunction tube_function(const PrimeField& F, int m, int x2p, int tp);
// max |T F - e(m x1) J_m(...)| for F = delta(x2-x2') delta(t-t') e(m x1), d = 3 hyperbolic.
double brolines_deviation(const Surface& H, int m, int x2p, int tp);

// h0 lives on the slice t = 0 of F^3 (as a function of (x1, x2)); returns the max over t != 0
// of | |h0*K|(x,t) - p |(h0 dsigma)^vee(w, t')| |.
double pseudo_conformal_check(const FFunction& h0, const Surface& S);

// F(x1,x2,x3) = delta(x2 - a x3 - b) f(x1, x3)
FFunction plane_embed(const FFunction& f, int a, int b);
// max |F^(xi) - f^(xi1, xi3 + a xi2) e(-b xi2)|
double plane_embed_ft_check(const FFunction& f, int a, int b);

// A = M^T B M: returns g on S_B with g(M xi) = f(xi). NotCongruent otherwise.
SurfaceFunction equivalence_transfer(const SurfaceFunction& f, const Mat& M, SurfacePtr SB);

} // namespace fflab
