#include "fflab/combinatorics/energy_exponent.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fflab/combinatorics/decompose.hpp"
#include "fflab/combinatorics/energy.hpp"

namespace fflab {

const char* to_string(ExponentKind k) {
    switch (k) {
    case ExponentKind::dim3_witt1: return "dim3_witt1";
    case ExponentKind::dim2: return "dim2";
    case ExponentKind::rank1_deg: return "rank1_deg";
    case ExponentKind::rank2_deg: return "rank2_deg";
    case ExponentKind::dim4: return "dim4";
    case ExponentKind::dim5_witt2: return "dim5_witt2";
    }
    return "?";
}

std::pair<double, double> validity_range(ExponentKind k) {
    switch (k) {
    case ExponentKind::dim3_witt1: return {0.75, 1.0};
    case ExponentKind::dim2: return {0.0, 1.0};
    case ExponentKind::rank1_deg: return {0.0, 1.0};
    case ExponentKind::rank2_deg: return {0.75, 1.0};
    case ExponentKind::dim4: return {0.6, 1.0};
    case ExponentKind::dim5_witt2: return {9.0 / 16.0, 1.0};
    }
    return {0.0, 1.0};
}

double energy_exponent_closed(ExponentKind k, double a) {
    auto [lo, hi] = validity_range(k);
    if (a < lo - 1e-15 || a > hi + 1e-15)
        throw OutOfValidityRange(std::string(to_string(k)) + " is stated for alpha in [" + std::to_string(lo) +
                                 ", " + std::to_string(hi) + "], got " + std::to_string(a));
    switch (k) {
    case ExponentKind::dim3_witt1: return 1.0 + 2.0 * a;
    case ExponentKind::dim2: return 2.0;
    case ExponentKind::rank1_deg: return 2.0 + a;
    case ExponentKind::rank2_deg: return 1.0 + 4.0 * a - 2.0 * a * a;
    case ExponentKind::dim4: return 2.5 + a / 2.0;
    case ExponentKind::dim5_witt2: return (19.0 + 2.0 * a) / 7.0;
    }
    return 3.0;
}

double energy_exponent_clamped(ExponentKind k, double a) {
    auto [lo, hi] = validity_range(k);
    return energy_exponent_closed(k, std::clamp(a, lo, hi));
}

double degenerate_lift(double psi_alpha, double alpha) { return 3.0 * alpha + psi_alpha * (1.0 - alpha); }

double EnergyExponent::operator()(double a) const {
    if (alpha.empty()) throw ConfigError("empty exponent grid");
    if (a <= alpha.front()) return psi.front();
    if (a >= alpha.back()) return psi.back();
    auto it = std::upper_bound(alpha.begin(), alpha.end(), a);
    size_t i = size_t(it - alpha.begin());
    double t = (a - alpha[i - 1]) / (alpha[i] - alpha[i - 1]);
    return psi[i - 1] + t * (psi[i] - psi[i - 1]);
}

bool EnergyExponent::satisfies_invariants(double tol) const {
    if (alpha.empty() || alpha.size() != psi.size()) return false;
    for (size_t i = 1; i < psi.size(); ++i)
        if (psi[i] < psi[i - 1] - tol) return false;
    if (std::abs(alpha.back() - 1.0) > tol || std::abs(psi.back() - 3.0) > tol) return false;
    for (size_t i = 0; i + 1 < psi.size(); ++i)
        if (alpha[i] < 1.0 && psi[i] >= 3.0 - tol) return false;
    return true;
}

std::vector<double> uniform_grid(int n) {
    std::vector<double> g(n + 1);
    for (int i = 0; i <= n; ++i) g[i] = double(i) / n;
    return g;
}

EnergyExponent exponent_from_closed(ExponentKind k, const std::vector<double>& grid) {
    EnergyExponent e{grid, {}, "closed_form"};
    for (double a : grid) e.psi.push_back(energy_exponent_clamped(k, a));
    return e;
}

RecurseResult energy_exponent_recurse(const EnergyExponent& inner, double alpha, double tol) {
    if (alpha >= 1.0) return {3.0, 1.0, true};
    auto g = [&](double rho) {
        double ratio = rho > 0 ? std::min(1.0, alpha / rho) : 0.0;
        return 2.5 + rho / 2.0 - 4.0 * (1.0 - rho) - inner(ratio);
    };
    double lo = std::max(alpha, 0.0), hi = 1.0;
    if (!(g(lo) < 0.0 && g(hi) > 0.0)) return {3.0, 1.0, false};
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        (g(mid) < 0.0 ? lo : hi) = mid;
    }
    double rho = 0.5 * (lo + hi);
    return {(5.0 + rho) / 2.0, rho, true};
}

EnergyExponent recurse_grid(const EnergyExponent& inner, const std::vector<double>& grid) {
    if (!inner.satisfies_invariants()) throw ConfigError("inner exponent violates monotonicity or Psi(1) = 3");
    EnergyExponent e{grid, {}, "recursion"};
    for (double a : grid) {
        auto r = energy_exponent_recurse(inner, a);
        if (!r.root_found && a < 1.0) throw NoRoot("no equalizing rho at alpha = " + std::to_string(a));
        e.psi.push_back(r.value);
    }
    return e;
}

EnergyExponent degenerate_lift_grid(const EnergyExponent& inner) {
    EnergyExponent e{inner.alpha, {}, "recursion"};
    for (size_t i = 0; i < inner.alpha.size(); ++i) e.psi.push_back(degenerate_lift(inner.psi[i], inner.alpha[i]));
    return e;
}

double reference_psi(const Surface& S, double a) {
    int m = S.param_dim();
    int w = S.form().witt_index();
    if (m == 1) return 2.0;
    if (m == 2) return w == 1 ? std::max(2.5, 1.0 + 2.0 * a) : 2.5;
    if (m == 3) return 2.5 + std::max(a, 0.6) / 2.0;
    if (m == 4 && w == 2) return std::max((19.0 + 2.0 * a) / 7.0, 23.0 / 8.0);
    return 3.0;
}

namespace {

AlphaEnergySample measure(const Surface& S, const std::vector<Subspace>& iso, const std::string& fam,
                          const std::vector<FFVector>& params) {
    PointSet E = lift_to_surface(S, params);
    PointSet U(S.field(), S.param_dim(), params);
    double n = double(E.size());
    int mx = iso.empty() ? 1 : max_coset_count(U, iso);
    double alpha = (mx <= 1 || n <= 1) ? 0.0 : std::log(double(mx)) / std::log(n);
    double lam = double(additive_energy(E));
    double ex = n <= 1 ? 0.0 : std::log(lam) / std::log(n);
    return {fam, E.size(), alpha, ex, reference_psi(S, alpha)};
}

}  // namespace

std::vector<AlphaEnergySample> empirical_alpha_energy(const SurfacePtr& S, int trials, std::uint64_t seed) {
    if (S->dim() > 5 || S->p() > 7) throw ConfigError("alpha-energy scatter is limited to d <= 5, p <= 7");
    const auto& F = S->field();
    int p = F.p(), m = S->param_dim();
    std::vector<Subspace> iso;
    if (S->form().witt_index() > 0) iso = S->form().max_isotropic();
    std::uint64_t N = S->size();
    std::vector<AlphaEnergySample> out;
    Rng rng(seed);
    auto coset_points = [&](const Subspace& V, const FFVector& t) {
        std::vector<FFVector> pts;
        for (const auto& v : V.elements()) pts.push_back(F.vadd(v, t));
        return pts;
    };
    for (int tr = 0; tr < trials; ++tr) {
        if (!iso.empty()) {
            const auto& V = iso[rng.below(int(iso.size()))];
            out.push_back(measure(*S, iso, "isotropic_subspace", coset_points(V, rng.vec(p, m))));
            auto a = coset_points(V, rng.vec(p, m));
            auto b = coset_points(iso[rng.below(int(iso.size()))], rng.vec(p, m));
            a.insert(a.end(), b.begin(), b.end());
            out.push_back(measure(*S, iso, "two_isotropic", a));
            auto c = coset_points(V, rng.vec(p, m));
            for (int k = 0; k < p; ++k) c.push_back(rng.vec(p, m));
            out.push_back(measure(*S, iso, "isotropic_plus_noise", c));
        }
        std::uint64_t lo = std::uint64_t(p), hi = std::min<std::uint64_t>(N, 4 * std::uint64_t(p) * p);
        std::uint64_t k = lo + rng.next() % (hi - lo + 1);
        std::vector<FFVector> r;
        for (auto idx : rng.sample(N, k)) r.push_back(decode(idx, p, m));
        out.push_back(measure(*S, iso, "random", r));
    }
    return out;
}

} // namespace fflab
