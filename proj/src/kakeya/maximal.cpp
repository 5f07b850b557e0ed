#include <cmath>

#include "fflab/ff/random.hpp"
#include "fflab/kakeya/kakeya.hpp"

namespace fflab {

std::vector<FFVector> AffineLine::points(const PrimeField& F) const {
    std::vector<FFVector> out;
    out.reserve(F.p());
    for (int t = 0; t < F.p(); ++t) {
        FFVector x = F.vadd(b, F.vscale(t, eta));
        x.push_back(t);
        out.push_back(std::move(x));
    }
    return out;
}

namespace {

// Indices of l(b, eta) in F^m; coordinate m-1 is t.
void line_indices(const PrimeField& F, const FFVector& b, const FFVector& eta, std::vector<std::uint64_t>& out) {
    int p = F.p(), k = int(b.size());
    out.resize(p);
    FFVector x(k + 1);
    for (int t = 0; t < p; ++t) {
        for (int i = 0; i < k; ++i) x[i] = F.add(b[i], F.mul(eta[i], t));
        x[k] = t;
        out[t] = encode(x, p);
    }
}

int fiber_dim(const FFunction& F) {
    if (F.dim() < 2) throw ConfigError("Kakeya operators need m >= 2");
    return F.dim() - 1;
}

}  // namespace

MaximalResult kakeya_maximal(const FFunction& Fn) {
    const PrimeField& F = Fn.field();
    int p = F.p(), k = fiber_dim(Fn);
    std::uint64_t nd = checked_size(p, k, "p^(m-1) directions");
    MaximalResult res{std::vector<double>(nd, 0.0), std::vector<FFVector>(nd)};
    std::vector<double> a(Fn.size());
    for (std::uint64_t i = 0; i < a.size(); ++i) a[i] = std::abs(Fn[i]);
    std::vector<std::uint64_t> idx;
    for (std::uint64_t e = 0; e < nd; ++e) {
        FFVector eta = decode(e, p, k);
        double best = -1.0;
        for (std::uint64_t bi = 0; bi < nd; ++bi) {
            FFVector b = decode(bi, p, k);
            line_indices(F, b, eta, idx);
            double s = 0.0;
            for (auto j : idx) s += a[j];
            if (s > best) {
                best = s;
                res.argmax[e] = b;
            }
        }
        res.value[e] = best;
    }
    return res;
}

double eot_ratio(const FFunction& Fn, double r) {
    if (r <= 0.0) r = Fn.dim();
    auto M = kakeya_maximal(Fn);
    std::vector<cd> v(M.value.begin(), M.value.end());
    double den = lp_norm(Fn, r, Measure::counting);
    if (den == 0.0) return 0.0;
    return lp_norm(v, r, 1.0 / double(v.size())) / den;
}

FFunction dual_kakeya_apply(const std::vector<cd>& h, const std::vector<FFVector>& x0, const PrimeField& F, int m) {
    int p = F.p(), k = m - 1;
    std::uint64_t nd = checked_size(p, k, "p^(m-1) directions");
    if (h.size() != nd || x0.size() != nd) throw ConfigError("dual Kakeya input has the wrong length");
    FFunction out(F, m);
    double w = std::pow(double(p), -k);
    std::vector<std::uint64_t> idx;
    for (std::uint64_t e = 0; e < nd; ++e) {
        if (h[e] == cd(0, 0)) continue;
        line_indices(F, x0[e], decode(e, p, k), idx);
        for (auto j : idx) out[j] += w * h[e];
    }
    return out;
}

LinearOp line_sum_op(const PrimeField& F, int m, std::vector<FFVector> x0) {
    int p = F.p(), k = m - 1;
    std::uint64_t nd = checked_size(p, k, "p^(m-1) directions");
    if (x0.size() != nd) throw ConfigError("one base per direction required");
    auto bases = std::make_shared<std::vector<FFVector>>(std::move(x0));
    LinearOp A;
    A.apply = [F, m, p, k, nd, bases](const std::vector<cd>& f) {
        std::vector<cd> out(nd);
        std::vector<std::uint64_t> idx;
        for (std::uint64_t e = 0; e < nd; ++e) {
            line_indices(F, (*bases)[e], decode(e, p, k), idx);
            cd s = 0;
            for (auto j : idx) s += f[j];
            out[e] = s;
        }
        (void)m;
        return out;
    };
    A.adjoint = [F, m, bases](const std::vector<cd>& h) { return dual_kakeya_apply(h, *bases, F, m).data(); };
    A.w_in = 1.0;
    A.w_out = std::pow(double(p), -k);
    return A;
}

DualityResult kakeya_duality(const PrimeField& F, int m, double r, std::uint64_t seed, int rounds) {
    if (r <= 0.0) r = 2.0 * m - 1.0;
    Rng rng(seed);
    FFunction f(F, m);
    for (std::uint64_t i = 0; i < f.size(); ++i) f[i] = rng.unit() + 0.05;
    DualityResult res{0, 0, 0, 0, {}};
    std::vector<FFVector> x0 = kakeya_maximal(f).argmax;
    for (int round = 1; round <= rounds; ++round) {
        res.rounds = round;
        auto A = line_sum_op(F, m, x0);
        auto b = boyd_iterate(A, f.data(), r, r, 4000, 1e-15);
        for (std::uint64_t i = 0; i < f.size(); ++i) f[i] = std::abs(b.argmax[i]);
        auto next = kakeya_maximal(f).argmax;
        if (next == x0) break;
        x0 = std::move(next);
    }
    auto A = line_sum_op(F, m, x0);
    auto Af = A.apply(f.data());
    std::vector<cd> h(Af.size());
    for (size_t i = 0; i < h.size(); ++i) {
        double a = std::abs(Af[i]);
        h[i] = a == 0.0 ? cd(0, 0) : Af[i] * std::pow(a, r - 2.0);
    }
    double rd = r / (r - 1.0);
    auto Dh = A.adjoint(h);
    res.maximal_ratio = eot_ratio(f, r);
    res.dual_ratio = lp_norm(Dh, rd, 1.0) / lp_norm(h, rd, A.w_out);
    res.gap = std::abs(res.maximal_ratio - res.dual_ratio);
    res.x0 = std::move(x0);
    return res;
}

} // namespace fflab
