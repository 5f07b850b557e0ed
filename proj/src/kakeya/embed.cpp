#include <cmath>

#include "fflab/kakeya/kakeya.hpp"

namespace fflab {

namespace {

int half_dim(const Surface& H) {
    if (H.kind() != SurfaceKind::hyperbolic) throw ConfigError("Kakeya embedding needs the hyperbolic paraboloid");
    return H.param_dim() / 2;
}

void check_inputs(const std::vector<double>& h, const std::vector<FFVector>& b, int p, int n) {
    std::uint64_t nd = checked_size(p, n, "p^n directions");
    if (h.size() != nd || b.size() != nd) throw ConfigError("h and b need one entry per direction");
    for (double v : h)
        if (v < 0.0) throw ConfigError("h must be nonnegative");
}

}  // namespace

SurfaceFunction restriction_to_kakeya_embed(const std::vector<double>& h, const std::vector<FFVector>& b,
                                            const SurfacePtr& H) {
    int n = half_dim(*H), p = H->p();
    check_inputs(h, b, p, n);
    const PrimeField& F = H->field();
    CharacterTable chi(p);
    SurfaceFunction f(H);
    FFVector par(2 * n);
    for (std::uint64_t i = 0; i < H->size(); ++i) {
        decode_into(i, p, par);
        FFVector xi(par.begin(), par.begin() + n), th(par.begin() + n, par.end());
        const FFVector& bb = b[encode(F.vscale(p - 1, th), p)];
        f[i] = std::sqrt(h[encode(th, p)]) * chi(F.neg(F.dot(bb, xi)));
    }
    return f;
}

FFunction embed_closed_form(const std::vector<double>& h, const std::vector<FFVector>& b, const SurfacePtr& H) {
    int n = half_dim(*H), p = H->p();
    check_inputs(h, b, p, n);
    const PrimeField& F = H->field();
    CharacterTable chi(p);
    FFunction out(F, 2 * n + 1);
    double w = std::pow(double(p), -n);
    std::uint64_t nd = h.size(), half = checked_size(p, n);
    for (std::uint64_t e = 0; e < nd; ++e) {
        if (h[e] == 0.0) continue;
        FFVector th = decode(e, p, n);
        FFVector v = F.vscale(p - 1, th);
        const FFVector& base = b[encode(v, p)];
        double amp = w * std::sqrt(h[e]);
        for (int t = 0; t < p; ++t) {
            FFVector x1 = F.vadd(base, F.vscale(t, v));
            std::uint64_t i1 = encode(x1, p);
            for (std::uint64_t i2 = 0; i2 < half; ++i2) {
                FFVector x2 = decode(i2, p, n);
                out[i1 + half * (i2 + half * std::uint64_t(t))] += amp * chi(F.dot(th, x2));
            }
        }
    }
    return out;
}

EmbedCheck restriction_to_kakeya_check(const std::vector<double>& h, const std::vector<FFVector>& b,
                                       const SurfacePtr& H, double q, double p_exp) {
    int n = half_dim(*H), p = H->p();
    auto f = restriction_to_kakeya_embed(h, b, H);
    auto E = extension(f);
    auto C = embed_closed_form(h, b, H);
    EmbedCheck res{};
    res.closed_form_dev = max_abs_diff(E.data(), C.data());

    std::vector<cd> hneg(h.size());
    const PrimeField& F = H->field();
    for (std::uint64_t e = 0; e < h.size(); ++e)
        hneg[e] = h[encode(F.vscale(p - 1, decode(e, p, n)), p)];
    auto D = dual_kakeya_apply(hneg, b, F, n + 1);

    std::uint64_t half = checked_size(p, n);
    double dev = 0.0;
    for (int t = 0; t < p; ++t)
        for (std::uint64_t i1 = 0; i1 < half; ++i1) {
            double s = 0.0;
            for (std::uint64_t i2 = 0; i2 < half; ++i2) s += std::norm(E[i1 + half * (i2 + half * std::uint64_t(t))]);
            double want = std::sqrt(std::max(0.0, D[i1 + half * std::uint64_t(t)].real()));
            dev = std::max(dev, std::abs(std::sqrt(s) - want));
        }
    res.collapse_dev = dev;

    double hn = lp_norm(hneg, q, 1.0 / double(hneg.size()));
    res.dual_ratio = hn == 0.0 ? 0.0 : lp_norm(D.data(), p_exp, 1.0) / hn;
    double fn = surface_norm(f, 2.0 * q);
    res.ext_ratio = fn == 0.0 ? 0.0 : lp_norm(E.data(), 2.0 * p_exp, 1.0) / fn;
    res.chain_rhs = std::pow(double(p), n * (1.0 - 1.0 / p_exp)) * res.ext_ratio * res.ext_ratio;
    res.chain_ok = res.dual_ratio <= res.chain_rhs * (1.0 + 1e-9) + 1e-12;
    return res;
}

std::pair<FFVector, FFVector> split_complementary(const Subspace& X1, const Subspace& X2, const FFVector& x) {
    const PrimeField& F = X1.field();
    auto b1 = X1.basis_vectors(), b2 = X2.basis_vectors();
    int m = X1.ambient(), k = int(b1.size() + b2.size());
    if (k != m || !complementary(X1, X2)) throw NonComplementary("split needs complementary subspaces");
    Mat A(m, k);
    for (int j = 0; j < int(b1.size()); ++j)
        for (int i = 0; i < m; ++i) A(i, j) = b1[j][i];
    for (int j = 0; j < int(b2.size()); ++j)
        for (int i = 0; i < m; ++i) A(i, int(b1.size()) + j) = b2[j][i];
    auto c = solve(F, A, x);
    if (!c) throw NonComplementary("split failed");
    FFVector x1(m, 0);
    for (int j = 0; j < int(b1.size()); ++j) x1 = F.vadd(x1, F.vscale((*c)[j], b1[j]));
    return {x1, F.vsub(x, x1)};
}

FFunction coset_extension(const SurfaceFunction& f, const Subspace& W, const Subspace& V) {
    const Surface& S = f.surface();
    const PrimeField& F = S.field();
    const QuadraticSpace& Q = S.form();
    int p = F.p(), m = S.param_dim();
    if (W.ambient() != m || V.ambient() != m || !complementary(W, V))
        throw NonComplementary("W and V must be complementary in the parameter space");
    if (!Q.totally_isotropic(W) || !Q.totally_isotropic(V))
        throw NotIsotropicPair("W and V must both be totally isotropic for the surface form");
    auto Dot = QuadraticSpace::sum_of_squares(F, m);
    auto wb = W.basis_vectors(), vb = V.basis_vectors();
    bool cross_zero = true;
    for (auto& w : wb)
        for (auto& v : vb)
            if (F.dot(w, v) != 0) cross_zero = false;
    // x1 pairs with xi1 in W, x2 with xi2 in V.
    bool paraboloid_regime = Dot.totally_isotropic(W) && Dot.totally_isotropic(V);
    if (!paraboloid_regime && !cross_zero)
        throw NotIsotropicPair("cross terms x2.xi1 do not vanish for this pair");
    const Subspace& X1 = paraboloid_regime ? V : W;
    const Subspace& X2 = paraboloid_regime ? W : V;

    auto Wel = W.elements(), Vel = V.elements();
    CharacterTable chi(p);
    FFunction out(F, m + 1);
    std::uint64_t nx = checked_size(p, m);
    double w = 1.0 / double(S.size());
    std::vector<std::vector<int>> cross(Wel.size(), std::vector<int>(Vel.size()));
    for (size_t a = 0; a < Wel.size(); ++a)
        for (size_t c = 0; c < Vel.size(); ++c) cross[a][c] = F.mul(2, Q.bilinear(Wel[a], Vel[c]));
    std::vector<std::uint64_t> fidx(Wel.size() * Vel.size());
    for (size_t a = 0; a < Wel.size(); ++a)
        for (size_t c = 0; c < Vel.size(); ++c) fidx[a * Vel.size() + c] = encode(F.vadd(Wel[a], Vel[c]), p);
    for (std::uint64_t ix = 0; ix < nx; ++ix) {
        auto [x1, x2] = split_complementary(X1, X2, decode(ix, p, m));
        std::vector<int> pw(Wel.size()), pv(Vel.size());
        for (size_t a = 0; a < Wel.size(); ++a) pw[a] = F.dot(Wel[a], x1);
        for (size_t c = 0; c < Vel.size(); ++c) pv[c] = F.dot(Vel[c], x2);
        for (int t = 0; t < p; ++t) {
            cd s = 0;
            for (size_t a = 0; a < Wel.size(); ++a)
                for (size_t c = 0; c < Vel.size(); ++c)
                    s += f[fidx[a * Vel.size() + c]] * chi.at((long long)pw[a] + pv[c] + (long long)t * cross[a][c]);
            out[ix + nx * std::uint64_t(t)] = w * s;
        }
    }
    return out;
}

} // namespace fflab
