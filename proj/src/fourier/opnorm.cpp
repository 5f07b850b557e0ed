#include "fflab/fourier/opnorm.hpp"

#include <cmath>

#include "fflab/ff/random.hpp"
#include "fflab/fourier/transform.hpp"

namespace fflab {

namespace {

// psi_r(z) = |z|^{r-2} z, the duality map of l^r up to scaling.
std::vector<cd> dual_map(const std::vector<cd>& z, double r) {
    std::vector<cd> out(z.size());
    for (size_t i = 0; i < z.size(); ++i) {
        double a = std::abs(z[i]);
        out[i] = a == 0.0 ? cd(0, 0) : z[i] * std::pow(a, r - 2.0);
    }
    return out;
}

void normalize(std::vector<cd>& x, double q, double w) {
    double n = lp_norm(x, q, w);
    if (n > 0)
        for (auto& v : x) v /= n;
}

}  // namespace

double op_ratio(const LinearOp& A, const std::vector<cd>& x, double q, double p) {
    double den = lp_norm(x, q, A.w_in);
    if (den == 0.0) return 0.0;
    return lp_norm(A.apply(x), p, A.w_out) / den;
}

BoydResult boyd_iterate(const LinearOp& A, std::vector<cd> x, double q, double p, int iters, double tol) {
    if (!(q > 1.0) || !(p > 1.0) || std::isinf(q) || std::isinf(p))
        throw ConfigError("Boyd iteration needs finite exponents > 1");
    double qd = q / (q - 1.0);
    normalize(x, q, A.w_in);
    BoydResult res{op_ratio(A, x, q, p), x, 0};
    double prev = res.ratio;
    for (int it = 1; it <= iters; ++it) {
        auto y = A.apply(x);
        auto z = A.adjoint(dual_map(y, p));
        x = dual_map(z, qd);
        normalize(x, q, A.w_in);
        double r = op_ratio(A, x, q, p);
        res.iterations = it;
        if (r > res.ratio) {
            res.ratio = r;
            res.argmax = x;
        }
        if (std::abs(r - prev) <= tol * std::max(1.0, r)) break;
        prev = r;
    }
    return res;
}

double exact_r22(const Surface& S) {
    return std::sqrt(std::pow(double(S.p()), S.dim()) / double(S.size()));
}

LinearOp extension_op(const SurfacePtr& S) {
    LinearOp A;
    A.apply = [S](const std::vector<cd>& g) { return extension(SurfaceFunction(S, g)).data(); };
    A.adjoint = [S](const std::vector<cd>& F) {
        return restriction(FFunction(S->field(), S->dim(), F), S).values();
    };
    A.w_in = 1.0 / double(S->size());
    A.w_out = 1.0;
    return A;
}

PowerResult power_iteration_r22(const SurfacePtr& S, int max_iter, double tol, std::uint64_t seed) {
    Rng rng(seed);
    auto A = extension_op(S);
    std::vector<cd> g(S->size());
    for (auto& v : g) v = rng.complex_unit_box();
    normalize(g, 2.0, A.w_in);
    double lam = 0.0;
    int it = 0;
    for (it = 1; it <= max_iter; ++it) {
        auto h = A.adjoint(A.apply(g));
        // Rayleigh quotient <A*A g, g>_{dsigma} with ||g|| = 1.
        cd rq = 0;
        for (size_t i = 0; i < g.size(); ++i) rq += h[i] * std::conj(g[i]);
        double next = std::real(rq) * A.w_in;
        g = h;
        normalize(g, 2.0, A.w_in);
        bool done = std::abs(next - lam) <= tol * std::max(1.0, next);
        lam = next;
        if (done) break;
    }
    return {std::sqrt(lam), it};
}

double extension_ratio(const SurfaceFunction& g, double q, double p) {
    double den = surface_norm(g, q);
    if (den == 0.0) return 0.0;
    return lp_norm(extension(g), p, Measure::counting) / den;
}

NormLowerBound r_star_lower_bound(const SurfacePtr& S, double q, double p, int restarts, int iters,
                                  std::uint64_t seed) {
    auto A = extension_op(S);
    std::vector<std::pair<std::string, std::vector<cd>>> cands;
    std::uint64_t n = S->size();
    cands.push_back({"constant", std::vector<cd>(n, 1.0)});
    {
        std::vector<cd> d(n, 0.0);
        d[0] = 1.0;
        cands.push_back({"point", d});
    }
    if (S->form().witt_index() > 0) {
        for (const auto& W : S->form().max_isotropic()) {
            std::vector<cd> ind(n, 0.0);
            for (const auto& w : W.elements()) ind[encode(w, S->p())] = 1.0;
            cands.push_back({"isotropic", ind});
        }
    }
    NormLowerBound best{0.0, "", {}};
    auto consider = [&](const std::string& src, const std::vector<cd>& x) {
        double r = op_ratio(A, x, q, p);
        if (r > best.value) best = {r, src, x};
    };
    for (const auto& [src, x] : cands) consider(src, x);
    bool boyd_ok = q > 1.0 && p > 1.0 && !std::isinf(q) && !std::isinf(p);
    if (boyd_ok) {
        auto start = best.witness;
        auto r = boyd_iterate(A, start, q, p, iters);
        if (r.ratio > best.value) best = {r.ratio, "boyd:" + best.source, r.argmax};
        Rng rng(seed);
        for (int k = 0; k < restarts; ++k) {
            std::vector<cd> x(n);
            for (auto& v : x) v = rng.complex_unit_box();
            auto rr = boyd_iterate(A, x, q, p, iters);
            if (rr.ratio > best.value) best = {rr.ratio, "boyd:random", rr.argmax};
        }
    }
    return best;
}

} // namespace fflab
