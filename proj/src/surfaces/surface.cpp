#include "fflab/surfaces/surface.hpp"

#include <cmath>
#include <string>

#include "fflab/ff/parallel.hpp"
#include "fflab/fourier/transform.hpp"
#include "fflab/simd/kernels.hpp"

namespace fflab {

const char* to_string(SurfaceKind k) {
    switch (k) {
    case SurfaceKind::paraboloid: return "paraboloid";
    case SurfaceKind::hyperbolic: return "hyperbolic";
    case SurfaceKind::general: return "general";
    }
    return "?";
}

Surface::Surface(SurfaceKind kind, QuadraticSpace Q) : kind_(kind), Q_(std::move(Q)) {
    if (!Q_.nondegenerate())
        throw DegenerateForm("surface needs a non-degenerate form (rank " + std::to_string(Q_.rank()) + ")");
    int m = Q_.dim();
    std::uint64_t n = checked_size(p(), m, "p^(d-1) surface points");
    qvals_.resize(n);
    parallel_for(n, [&](std::uint64_t i) { qvals_[i] = Q_.Q(decode(i, p(), m)); });
}

std::shared_ptr<const Surface> Surface::paraboloid(const PrimeField& F, int d) {
    if (d < 2) throw ConfigError("paraboloid needs d >= 2");
    return std::shared_ptr<const Surface>(
        new Surface(SurfaceKind::paraboloid, QuadraticSpace::sum_of_squares(F, d - 1)));
}

std::shared_ptr<const Surface> Surface::hyperbolic(const PrimeField& F, int d) {
    if (d < 3 || d % 2 == 0) throw ConfigError("hyperbolic paraboloid needs odd d >= 3");
    return std::shared_ptr<const Surface>(
        new Surface(SurfaceKind::hyperbolic, QuadraticSpace::hyperbolic(F, d - 1)));
}

std::shared_ptr<const Surface> Surface::general(const QuadraticSpace& Q) {
    return std::shared_ptr<const Surface>(new Surface(SurfaceKind::general, Q));
}

FFVector Surface::point(std::uint64_t i) const {
    FFVector x = decode(i, p(), param_dim());
    x.push_back(qvals_[i]);
    return x;
}

bool Surface::contains(const FFVector& x) const {
    if (int(x.size()) != dim()) return false;
    FFVector xi(x.begin(), x.end() - 1);
    return qvals_[encode(xi, p())] == x.back();
}

SurfaceFunction::SurfaceFunction(SurfacePtr S) : S_(std::move(S)), v_(S_->size(), cd(0.0, 0.0)) {}

SurfaceFunction::SurfaceFunction(SurfacePtr S, std::vector<cd> values) : S_(std::move(S)), v_(std::move(values)) {
    if (v_.size() != S_->size()) throw ConfigError("surface function length mismatch");
}

double surface_norm(const SurfaceFunction& f, double p_exp) {
    return lp_norm(f.values(), p_exp, 1.0 / double(f.size()));
}

cd surface_inner(const SurfaceFunction& f, const SurfaceFunction& g) {
    return simd::cdot_conj(f.values().data(), g.values().data(), f.size()) / double(f.size());
}

FFunction extension(const SurfaceFunction& f) {
    const Surface& S = f.surface();
    int p = S.p(), m = S.param_dim();
    CharacterTable chi(p);
    std::uint64_t n = S.size();
    FFunction out(S.field(), S.dim());
    double scale = 1.0 / double(n);
    std::vector<cd> slice(n);
    for (int t = 0; t < p; ++t) {
        for (std::uint64_t i = 0; i < n; ++i) slice[i] = f[i] * chi.at((long long)t * S.qval(i));
        dft_inplace(slice, p, m, +1);
        cd* dst = out.data().data() + std::uint64_t(t) * n;
        for (std::uint64_t i = 0; i < n; ++i) dst[i] = slice[i] * scale;
    }
    return out;
}

FFunction extension_direct(const SurfaceFunction& f) {
    const Surface& S = f.surface();
    const auto& F = S.field();
    int p = S.p(), d = S.dim(), m = S.param_dim();
    CharacterTable chi(p);
    std::uint64_t n = S.size();
    std::vector<FFVector> pts(n);
    for (std::uint64_t i = 0; i < n; ++i) pts[i] = decode(i, p, m);
    FFunction out(F, d);
    parallel_for(out.size(), [&](std::uint64_t xi) {
        FFVector x = decode(xi, p, d);
        cd s = 0;
        for (std::uint64_t i = 0; i < n; ++i) {
            long long ph = (long long)x[m] * S.qval(i);
            for (int k = 0; k < m; ++k) ph += (long long)x[k] * pts[i][k];
            s += f[i] * chi.at(ph);
        }
        out[xi] = s / double(n);
    });
    return out;
}

SurfaceFunction restriction(const FFunction& F, SurfacePtr S) {
    if (F.dim() != S->dim() || F.p() != S->p()) throw ConfigError("restriction: dimension or field mismatch");
    FFunction Fh = fourier_transform(F);
    SurfaceFunction g(S);
    std::uint64_t n = S->size();
    for (std::uint64_t i = 0; i < n; ++i) g[i] = Fh[i + n * std::uint64_t(S->qval(i))];
    return g;
}

cd gauss_sum(const PrimeField& F, int t) {
    CharacterTable chi(F.p());
    cd s = 0;
    for (int x = 0; x < F.p(); ++x) s += chi.at((long long)t * x * x);
    return s;
}

cd gauss_sum_closed(const PrimeField& F, int t) {
    int p = F.p();
    t = F.reduce(t);
    if (t == 0) return cd(p, 0);
    double legendre = F.is_square(t) ? 1.0 : -1.0;
    cd eps = (p % 4 == 1) ? cd(1, 0) : cd(0, 1);
    return legendre * eps * std::sqrt(double(p));
}

FFunction surface_measure_closed_form(const Surface& S) {
    const auto& F = S.field();
    int p = S.p(), d = S.dim(), m = S.param_dim();
    CharacterTable chi(p);
    FFunction out(F, d);
    if (S.kind() == SurfaceKind::general) throw ConfigError("no closed form for a general surface");
    std::vector<cd> gm(p);
    for (int t = 1; t < p; ++t) gm[t] = std::pow(gauss_sum_closed(F, t), m);
    double pn = std::pow(double(p), -(m / 2));
    double pm = std::pow(double(p), -m);
    parallel_for(out.size(), [&](std::uint64_t idx) {
        FFVector x = decode(idx, p, d);
        int t = x[m];
        if (t == 0) {
            bool zero = true;
            for (int k = 0; k < m; ++k) zero = zero && x[k] == 0;
            out[idx] = zero ? 1.0 : 0.0;
            return;
        }
        if (S.kind() == SurfaceKind::hyperbolic) {
            int n = m / 2;
            long long s = 0;
            for (int k = 0; k < n; ++k) s += (long long)x[k] * x[n + k];
            out[idx] = pn * chi.at(-(long long)F.mul(F.reduce(s), F.inv(t)));
        } else {
            long long s = 0;
            for (int k = 0; k < m; ++k) s += (long long)x[k] * x[k];
            int inv4t = F.inv(F.mul(4 % p, t));
            out[idx] = pm * gm[t] * chi.at(-(long long)F.mul(F.reduce(s), inv4t));
        }
    });
    return out;
}

FFunction surface_measure_direct(const Surface& S) {
    auto sp = std::shared_ptr<const Surface>(std::shared_ptr<const Surface>{}, &S);
    SurfaceFunction one(sp, std::vector<cd>(S.size(), cd(1.0, 0.0)));
    return extension_direct(one);
}

FFunction surface_measure_inverse_ft(const Surface& S) {
    if (S.kind() != SurfaceKind::general) return surface_measure_closed_form(S);
    auto sp = std::shared_ptr<const Surface>(std::shared_ptr<const Surface>{}, &S);
    return extension(SurfaceFunction(sp, std::vector<cd>(S.size(), cd(1.0, 0.0))));
}

FFunction convolve_direct(const FFunction& f, const FFunction& g) {
    const auto& F = f.field();
    int p = f.p(), d = f.dim();
    FFunction out(F, d);
    std::uint64_t n = f.size();
    parallel_for(n, [&](std::uint64_t xi) {
        FFVector x = decode(xi, p, d), y(d);
        cd s = 0;
        for (std::uint64_t yi = 0; yi < n; ++yi) {
            if (f[yi] == cd(0, 0)) continue;
            decode_into(yi, p, y);
            s += f[yi] * g.at(F.vsub(x, y));
        }
        out[xi] = s;
    });
    return out;
}

FFunction convolve_fourier(const FFunction& f, const FFunction& g) {
    FFunction a = fourier_transform(f);
    FFunction b = fourier_transform(g);
    simd::cmul(a.data().data(), b.data().data(), a.data().data(), a.size());
    return inverse_transform(a);
}

FFunction bochner_riesz(const FFunction& F, const Surface& S, BRVariant v, ConvMethod method) {
    FFunction K = surface_measure_inverse_ft(S);
    if (v == BRVariant::with_delta) K[0] -= 1.0;
    return method == ConvMethod::direct ? convolve_direct(F, K) : convolve_fourier(F, K);
}

FFunction tube_function(const PrimeField& F, int m, int x2p, int tp) {
    int p = F.p();
    FFunction J(F, 3);
    for (int x1 = 0; x1 < p; ++x1)
        for (int x2 = 0; x2 < p; ++x2)
            for (int t = 0; t < p; ++t) {
                int u = F.sub(x2, x2p), s = F.sub(t, tp);
                bool on = (s == 0) ? (u == 0) : (F.add(F.div(u, s), F.reduce(m)) == 0);
                if (on) J.at({x1, x2, t}) = 1.0;
            }
    return J;
}

double brolines_deviation(const Surface& H, int m, int x2p, int tp) {
    if (H.kind() != SurfaceKind::hyperbolic || H.dim() != 3)
        throw ConfigError("line identity is stated for the 3-d hyperbolic paraboloid");
    const auto& F = H.field();
    int p = F.p();
    CharacterTable chi(p);
    FFunction in(F, 3);
    for (int x1 = 0; x1 < p; ++x1) in.at({x1, x2p, tp}) = chi.at((long long)m * x1);
    FFunction T = bochner_riesz(in, H, BRVariant::kernel_only);
    FFunction J = tube_function(F, m, x2p, tp);
    double dev = 0;
    for (std::uint64_t i = 0; i < T.size(); ++i) {
        int x1 = int(i % p);
        dev = std::max(dev, std::abs(T[i] - chi.at((long long)m * x1) * J[i]));
    }
    return dev;
}

double pseudo_conformal_check(const FFunction& h0, const Surface& S) {
    if (S.dim() != 3 || S.kind() == SurfaceKind::general)
        throw ConfigError("pseudo-conformal check needs d = 3 and a closed-form surface");
    const auto& F = S.field();
    int p = F.p();
    if (h0.dim() != 2 || h0.p() != p) throw ConfigError("slice function must live on F_p^2");
    FFunction H(F, 3);
    for (std::uint64_t i = 0; i < h0.size(); ++i) H[i] = h0[i];  // t = 0 block
    FFunction lhs = bochner_riesz(H, S, BRVariant::with_delta);
    auto sp = std::shared_ptr<const Surface>(std::shared_ptr<const Surface>{}, &S);
    FFunction rhs = extension(SurfaceFunction(sp, h0.data()));
    double dev = 0;
    for (int t = 1; t < p; ++t) {
        int ti = F.inv(t);
        for (int x1 = 0; x1 < p; ++x1)
            for (int x2 = 0; x2 < p; ++x2) {
                FFVector w;
                int tq;
                if (S.kind() == SurfaceKind::hyperbolic) {
                    w = {F.mul(x2, ti), F.mul(x1, ti)};
                    tq = F.neg(ti);
                } else {
                    int i2 = F.inv(F.mul(2, t));
                    w = {F.mul(x1, i2), F.mul(x2, i2)};
                    tq = F.neg(F.inv(F.mul(4 % p, t)));
                }
                double a = std::abs(lhs.at({x1, x2, t}));
                double b = p * std::abs(rhs.at({w[0], w[1], tq}));
                dev = std::max(dev, std::abs(a - b));
            }
    }
    return dev;
}

FFunction plane_embed(const FFunction& f, int a, int b) {
    const auto& F = f.field();
    int p = F.p();
    if (f.dim() != 2) throw ConfigError("plane_embed takes a function on F_p^2");
    FFunction out(F, 3);
    for (int x1 = 0; x1 < p; ++x1)
        for (int x3 = 0; x3 < p; ++x3) {
            int x2 = F.add(F.mul(F.reduce(a), x3), F.reduce(b));
            out.at({x1, x2, x3}) = f.at({x1, x3});
        }
    return out;
}

double plane_embed_ft_check(const FFunction& f, int a, int b) {
    const auto& F = f.field();
    int p = F.p();
    CharacterTable chi(p);
    FFunction big = fourier_transform(plane_embed(f, a, b));
    FFunction small = fourier_transform(f);
    double dev = 0;
    for (int x1 = 0; x1 < p; ++x1)
        for (int x2 = 0; x2 < p; ++x2)
            for (int x3 = 0; x3 < p; ++x3) {
                cd want = small.at({x1, F.add(x3, F.mul(F.reduce(a), x2))}) *
                          chi.at(-(long long)F.reduce(b) * x2);
                dev = std::max(dev, std::abs(big.at({x1, x2, x3}) - want));
            }
    return dev;
}

SurfaceFunction equivalence_transfer(const SurfaceFunction& f, const Mat& M, SurfacePtr SB) {
    const Surface& SA = f.surface();
    const auto& F = SA.field();
    int m = SA.param_dim();
    if (SB->param_dim() != m || M.rows != m || M.cols != m)
        throw NotCongruent("dimension mismatch between surfaces and matrix");
    Mat C = mul(F, mul(F, transpose(M), SB->form().matrix()), M);
    if (!(C == SA.form().matrix())) throw NotCongruent("M^T B M differs from A");
    SurfaceFunction g(SB);
    int p = F.p();
    FFVector xi(m);
    for (std::uint64_t i = 0; i < f.size(); ++i) {
        decode_into(i, p, xi);
        g[encode(matvec(F, M, xi), p)] = f[i];
    }
    return g;
}

} // namespace fflab
