// FT, ST, EQ, BR, MT and PL scenario families.
#include <algorithm>
#include <cmath>

#include "common.hpp"
#include "fflab/combinatorics/decompose.hpp"
#include "fflab/combinatorics/energy_exponent.hpp"
#include "fflab/combinatorics/pointset.hpp"
#include "fflab/fourier/exponents.hpp"
#include "fflab/fourier/opnorm.hpp"
#include "fflab/fourier/transform.hpp"

namespace fflab::harness {

namespace {

double l2(const FFunction& f) { return lp_norm(f, 2.0, Measure::counting); }

// Closed form of (dsigma)^vee against the direct sum, plus how far |(dsigma)^vee(x)| for x != 0
// exceeds p^{-(d-1)/2}.
Outcome closed_form_check(const SurfacePtr& S) {
    auto cf = surface_measure_closed_form(*S);
    auto dir = surface_measure_direct(*S);
    double dev = max_abs_diff(cf.data(), dir.data());
    double decay = std::pow(double(S->p()), -0.5 * (S->dim() - 1));
    double excess = 0.0;
    for (std::uint64_t i = 1; i < cf.size(); ++i) excess = std::max(excess, std::abs(cf[i]) - decay);
    Outcome o;
    o.metric = std::max(dev, excess);
    o.details["closed_form_deviation"] = dev;
    o.details["decay_excess"] = excess;
    o.details["points"] = cf.size();
    if (o.metric > kExactTol) o.witness = dir.data();
    return o;
}

Scenario ft1() {
    auto s = make("FT-1", "closed form of the inverse transform of the hyperbolic paraboloid measure",
                  Kind::exact_identity, {3, 5, 7}, {3}, 1);
    s.run = [](const Context& c) {
        if (c.d() % 2 == 0 || c.d() < 3) return not_applicable("the hyperbolic paraboloid needs odd d >= 3");
        return closed_form_check(Surface::hyperbolic(PrimeField(c.p()), c.d()));
    };
    return s;
}

Scenario ft2() {
    auto s = make("FT-2", "closed form of the inverse transform of the paraboloid measure", Kind::exact_identity,
                  {3, 5, 7}, {3}, 1);
    s.run = [](const Context& c) {
        if (c.d() < 2) return not_applicable("needs d >= 2");
        return closed_form_check(Surface::paraboloid(PrimeField(c.p()), c.d()));
    };
    return s;
}

Scenario ft3() {
    auto s = make("FT-3", "Plancherel identity and transform round trip", Kind::exact_identity, {3, 5, 7}, {3}, 20);
    s.run = [](const Context& c) {
        PrimeField F(c.p());
        int d = c.d();
        std::uint64_t n = checked_size(c.p(), d, "prime^dim");
        bool naive = n <= 3125;
        return worst_trial(c, c.params.trials, [&](int, Rng& rng) {
            FFunction f(F, d, random_values(rng, n));
            auto fh = fourier_transform(f);
            double lhs = lp_norm(fh, 2.0, Measure::counting);
            double rhs = std::sqrt(double(n)) * l2(f);
            double planch = std::abs(lhs - rhs) / rhs;
            double round = max_abs_diff(inverse_transform(fh).data(), f.data());
            double vs_naive = naive ? max_abs_diff(fh.data(), fourier_transform_naive(f).data()) / double(n) : 0.0;
            Trial t;
            t.metric = std::max({planch, round, vs_naive});
            t.info = {{"plancherel_rel", planch}, {"round_trip", round}, {"fast_vs_naive_scaled", vs_naive}};
            t.witness = f.data();
            return t;
        });
    };
    return s;
}

// f with support E, normalized in L^r(dx).
FFunction normalized_random(Rng& rng, const PrimeField& F, int d, std::uint64_t k, double r, double lo,
                            double hi) {
    std::uint64_t n = checked_size(F.p(), d, "prime^dim");
    auto f = random_on(rng, F, d, random_subset(rng, n, k), lo, hi);
    double nr = lp_norm(f, r, Measure::counting);
    for (auto& z : f.data()) z /= nr;
    return f;
}

Scenario st1() {
    auto s = make("ST-1", "extension bound for functions bounded below on their support",
                  Kind::constant_tracked, {3, 5, 7}, {3}, 60);
    s.baselines = {baseline("ST-1", "random_supports_with_singletons", 3, 3, 600)};
    s.run = [](const Context& c) {
        PrimeField F(c.p());
        int d = c.d();
        auto S = default_surface(F, d);
        double q = stein_tomas_exponent(d), pd = q / (q - 1.0), dt = d - 1;
        std::uint64_t n = checked_size(c.p(), d, "prime^dim");
        const double thetas[] = {0.25, 0.5, 0.75};
        return worst_trial(c, c.params.trials, [&](int t, Rng& rng) {
            double th = thetas[t % 3];
            double r = q / (q - th);
            std::uint64_t k = t < 3 ? 1 : 1 + rng.below(int(std::min<std::uint64_t>(n, 4 * n / c.p())));
            auto f = normalized_random(rng, F, d, k, r, 1.0, 4.0);
            double lam = kInf;
            for (const auto& z : f.data())
                if (std::abs(z) > 0) lam = std::min(lam, std::abs(z));
            double lhs = surface_norm(restriction(f, S), pd);
            double rhs = 1.0 + std::pow(double(c.p()), -dt / 4.0) * std::pow(lam, -th / (q - th));
            Trial tr;
            tr.metric = lhs / rhs;
            tr.info = {{"theta", th}, {"support", k}, {"lambda", lam}, {"lhs", lhs}, {"rhs", rhs}};
            tr.witness = f.data();
            return tr;
        });
    };
    return s;
}

Scenario st2() {
    auto s = make("ST-2", "extension bound for functions bounded above", Kind::constant_tracked, {3, 5, 7}, {3}, 60);
    s.baselines = {baseline("ST-2", "random_supports_with_singletons", 3, 3, 600)};
    s.run = [](const Context& c) {
        PrimeField F(c.p());
        int d = c.d();
        auto S = default_surface(F, d);
        double r22 = exact_r22(*S);
        std::uint64_t n = checked_size(c.p(), d, "prime^dim");
        const double thetas[] = {0.25, 0.5, 0.75};
        return worst_trial(c, c.params.trials, [&](int t, Rng& rng) {
            double th = thetas[t % 3];
            std::uint64_t k = t < 3 ? 1 : 1 + rng.below(int(n));
            auto f = normalized_random(rng, F, d, k, 2.0 / (2.0 - th), 0.2, 2.0);
            double lam = lp_norm(f, kInf, Measure::counting);
            double lhs = surface_norm(restriction(f, S), 2.0);
            double rhs = r22 * std::pow(lam, (1.0 - th) / (2.0 - th));
            Trial tr;
            tr.metric = lhs / rhs;
            tr.info = {{"theta", th}, {"support", k}, {"lambda", lam}, {"lhs", lhs}, {"rhs", rhs}};
            tr.witness = f.data();
            return tr;
        });
    };
    return s;
}

Scenario st3() {
    auto s = make("ST-3", "L2 extension constant against power iteration", Kind::exact_identity, {3, 5}, {3}, 1);
    s.tolerance = 1e-6;
    s.run = [](const Context& c) {
        PrimeField F(c.p());
        Outcome o;
        double worst = 0.0;
        for (auto S : {Surface::paraboloid(F, c.d()), default_surface(F, c.d())}) {
            double exact = exact_r22(*S);
            auto pw = power_iteration_r22(S, 500, 1e-14, c.trial_seed(0));
            double dev = std::abs(pw.value - exact) / exact;
            o.details[to_string(S->kind())] = {{"exact", exact}, {"power", pw.value}, {"iterations", pw.iterations}};
            worst = std::max(worst, dev);
        }
        o.metric = worst;
        return o;
    };
    return s;
}

Scenario st4() {
    auto s = make("ST-4", "exponent transfer between extension estimates", Kind::exponent_arith, {3}, {3, 5}, 1);
    s.run = [](const Context& c) {
        int d = c.d();
        double a = 0.37, dt = d - 1;
        struct Check {
            const char* name;
            double got, want;
        } checks[] = {
            {"half_half_dim2", stein_tomas_transfer(0.5, 0.5, 2.0), 0.0},
            {"theta_one", stein_tomas_transfer(a, 1.0, dt), a},
            {"alpha_zero", stein_tomas_transfer(0.0, 0.6, dt), 0.0},
            {"stein_tomas_point", stein_tomas_transfer(0.5, double(d - 1) / (d + 1), dt), 0.0},
            {"linear_branch", stein_tomas_transfer(1.0, 0.9, dt), std::max(0.0, 0.9 - dt * 0.1 / 4.0)},
        };
        Outcome o;
        for (const auto& ch : checks) {
            double dev = std::abs(ch.got - ch.want);
            o.details[ch.name] = {{"value", ch.got}, {"expected", ch.want}};
            o.metric = std::max(o.metric, dev);
        }
        return o;
    };
    return s;
}

// Support: a random set, or a random affine subspace (trial parity).
std::vector<std::uint64_t> structured_support(Rng& rng, const PrimeField& F, int d, int t) {
    int p = F.p();
    std::uint64_t n = checked_size(p, d, "prime^dim");
    if (t % 2 == 0) return random_subset(rng, n, 2 + rng.below(int(n - 1)));
    int k = 1 + rng.below(d);
    std::vector<FFVector> gens;
    for (int i = 0; i < k; ++i) gens.push_back(rng.vec(p, d));
    Subspace V(F, d, gens, rng.vec(p, d));
    std::vector<std::uint64_t> idx;
    for (const auto& x : V.elements()) idx.push_back(encode(x, p));
    std::sort(idx.begin(), idx.end());
    return idx;
}

Scenario st5() {
    auto s = make("ST-5", "L2 restriction bound from Fourier decay for sets above the decay threshold",
                  Kind::constant_tracked, {3, 5, 7}, {3}, 60);
    s.baselines = {baseline("ST-5", "random_and_affine_supports", 3, 3, 600)};
    s.run = [](const Context& c) {
        PrimeField F(c.p());
        int d = c.d();
        auto S = default_surface(F, d);
        double dt = d - 1;
        return worst_trial(c, c.params.trials, [&](int t, Rng& rng) {
            auto idx = structured_support(rng, F, d, t);
            Trial tr;
            double g = logp(double(idx.size()), c.p());
            if (4.0 * g <= dt) {
                tr.skip = true;
                return tr;
            }
            auto f = random_on(rng, F, d, idx);
            double lhs = surface_norm(restriction(f, S), 2.0);
            double rhs = l2(f) + lp_norm(f, 4.0 * g / (4.0 * g - dt), Measure::counting);
            tr.metric = lhs / rhs;
            tr.info = {{"support", idx.size()}, {"gamma", g}, {"lhs", lhs}, {"rhs", rhs}};
            tr.witness = f.data();
            return tr;
        });
    };
    return s;
}

Scenario st6() {
    auto s = make("ST-6", "L2 restriction bound for functions of size about one on their support",
                  Kind::constant_tracked, {3, 5, 7}, {3}, 60);
    s.baselines = {baseline("ST-6", "random_and_affine_supports", 3, 3, 600)};
    s.run = [](const Context& c) {
        PrimeField F(c.p());
        int d = c.d();
        auto S = default_surface(F, d);
        return worst_trial(c, c.params.trials, [&](int t, Rng& rng) {
            auto idx = structured_support(rng, F, d, t);
            Trial tr;
            if (idx.size() < 2) {
                tr.skip = true;
                return tr;
            }
            double g = logp(double(idx.size()), c.p());
            if (g < 1.0) {
                tr.skip = true;
                return tr;
            }
            auto f = random_on(rng, F, d, idx);
            double lhs = surface_norm(restriction(f, S), 2.0);
            double rhs = lp_norm(f, 2.0 * g / (g + 1.0), Measure::counting);
            tr.metric = lhs / rhs;
            tr.info = {{"support", idx.size()}, {"gamma", g}, {"lhs", lhs}, {"rhs", rhs}};
            tr.witness = f.data();
            return tr;
        });
    };
    return s;
}

Mat random_invertible(Rng& rng, const PrimeField& F, int n) {
    for (;;) {
        Mat M(n, n);
        for (auto& x : M.a) x = rng.below(F.p());
        if (det(F, M) != 0) return M;
    }
}

Scenario eq1() {
    auto s = make("EQ-1", "extension norms agree on surfaces of congruent forms", Kind::exact_identity, {3, 5, 7}, {3},
                  20);
    s.run = [](const Context& c) {
        PrimeField F(c.p());
        int m = c.d() - 1;
        if (m < 1) return not_applicable("needs d >= 2");
        return worst_trial(c, c.params.trials, [&](int, Rng& rng) {
            std::vector<int> diag(m);
            for (auto& x : diag) x = 1 + rng.below(c.p() - 1);
            Mat B = Mat::diagonal(diag);
            Mat M = random_invertible(rng, F, m);
            Mat A = mul(F, transpose(M), mul(F, B, M));
            auto SA = Surface::general(QuadraticSpace(F, A));
            auto SB = Surface::general(QuadraticSpace(F, B));
            SurfaceFunction f(SA, random_values(rng, SA->size()));
            auto g = equivalence_transfer(f, M, SB);
            auto ef = extension(f), eg = extension(g);
            double dev = 0.0;
            json per = json::object();
            for (double r : {2.0, 4.0, 3.5}) {
                double a = lp_norm(ef, r, Measure::counting), b = lp_norm(eg, r, Measure::counting);
                double rel = std::abs(a - b) / a;
                dev = std::max(dev, rel);
                per["ext_L" + std::to_string(r).substr(0, 3)] = rel;
            }
            for (double r : {1.5, 2.0, 3.0}) {
                double a = surface_norm(f, r), b = surface_norm(g, r);
                double rel = std::abs(a - b) / a;
                dev = std::max(dev, rel);
                per["surface_L" + std::to_string(r).substr(0, 3)] = rel;
            }
            Trial t;
            t.metric = dev;
            t.info = per;
            t.witness = f.values();
            return t;
        });
    };
    return s;
}

Scenario br1() {
    auto s = make("BR-1", "Bochner-Riesz kernel acting on a single modulated line", Kind::exact_identity, {3, 5}, {3},
                  1);
    s.run = [](const Context& c) {
        if (c.d() != 3) return not_applicable("defined for d = 3");
        PrimeField F(c.p());
        auto H = Surface::hyperbolic(F, 3);
        int p = c.p();
        std::vector<double> dev(std::size_t(p) * p * p);
        parallel_for(dev.size(), [&](std::uint64_t i) {
            int m = int(i % p), x2 = int(i / p % p), t = int(i / p / p);
            dev[i] = brolines_deviation(*H, m, x2, t);
        });
        auto it = std::max_element(dev.begin(), dev.end());
        std::size_t w = std::size_t(it - dev.begin());
        Outcome o;
        o.metric = *it;
        o.details["cases"] = dev.size();
        o.details["worst"] = {{"m", int(w % p)}, {"x2", int(w / p % p)}, {"t", int(w / p / p)}};
        return o;
    };
    return s;
}

// F(x1, x2, t) = sum over (x2', t') in I of delta(x2 - x2') delta(t - t') f_i(x1).
FFunction line_stack(Rng& rng, const PrimeField& F, const std::vector<std::pair<int, int>>& I) {
    int p = F.p();
    FFunction out(F, 3);
    for (auto [x2, t] : I)
        for (int x1 = 0; x1 < p; ++x1) out[std::uint64_t(x1) + p * (x2 + std::uint64_t(p) * t)] = rng.complex_unit_box();
    return out;
}

// max over lines {x2 = a t + b} of the number of (x2, t) in I on the line.
int max_line_count(const PrimeField& F, const std::vector<std::pair<int, int>>& I) {
    int p = F.p(), best = 0;
    for (int a = 0; a < p; ++a) {
        std::vector<int> cnt(p, 0);
        for (auto [x2, t] : I) best = std::max(best, ++cnt[F.sub(x2, F.mul(a, t))]);
    }
    return best;
}

Scenario br2() {
    auto s = make("BR-2", "Bochner-Riesz L2 bound for functions on lines with bounded line concentration",
                  Kind::constant_tracked, {3, 5, 7}, {3}, 40);
    s.baselines = {baseline("BR-2", "exhaustive_line_sets_p3", 3, 3, 512)};
    s.run = [](const Context& c) {
        if (c.d() != 3) return not_applicable("defined for d = 3");
        PrimeField F(c.p());
        int p = c.p();
        auto H = Surface::hyperbolic(F, 3);
        bool exhaustive = c.oracle && p == 3;
        int n = exhaustive ? 512 : c.params.trials;
        return worst_trial(c, n, [&](int t, Rng& rng) {
            std::vector<std::pair<int, int>> I;
            if (exhaustive) {
                for (int b = 0; b < 9; ++b)
                    if (t >> b & 1) I.push_back({b % 3, b / 3});
            } else {
                for (auto i : random_subset(rng, std::uint64_t(p) * p, 1 + rng.below(p * p)))
                    I.push_back({int(i % p), int(i / p)});
            }
            Trial tr;
            if (I.empty()) {
                tr.skip = true;
                return tr;
            }
            auto Fn = line_stack(rng, F, I);
            auto TF = bochner_riesz(Fn, *H, BRVariant::kernel_only);
            int mx = max_line_count(F, I);
            double u = logp(mx, p);
            tr.metric = l2(TF) / (std::pow(double(p), (1.0 + u) / 2.0) * l2(Fn));
            tr.info = {{"lines", I.size()}, {"max_on_line", mx}};
            tr.witness = Fn.data();
            return tr;
        });
    };
    return s;
}

// Union of pieces of VH lines: type 1 {(x, y0, t0)}, type 2 {(x0, y, t0)}.
struct LineUnion {
    std::vector<std::uint64_t> idx;
    int min_piece;
};

LineUnion vh_line_union(Rng& rng, const PrimeField& F, int lines) {
    int p = F.p();
    std::vector<char> in(std::size_t(p) * p * p, 0);
    int min_piece = p;
    for (int l = 0; l < lines; ++l) {
        int type = rng.below(2), a = rng.below(p), t0 = rng.below(p);
        int k = 1 + rng.below(p);
        min_piece = std::min(min_piece, k);
        for (auto s : random_subset(rng, p, k)) {
            int x1 = type == 0 ? int(s) : a, x2 = type == 0 ? a : int(s);
            in[std::size_t(x1) + p * (x2 + std::size_t(p) * t0)] = 1;
        }
    }
    LineUnion u{{}, min_piece};
    for (std::size_t i = 0; i < in.size(); ++i)
        if (in[i]) u.idx.push_back(i);
    return u;
}

int max_vh_plane_count(const PrimeField& F, const std::vector<std::uint64_t>& idx) {
    int best = 0;
    for (const auto& P : all_vh_planes(F)) {
        int n = 0;
        for (auto i : idx) n += P.contains(F, decode(i, F.p(), 3));
        best = std::max(best, n);
    }
    return best;
}

Scenario br3() {
    auto s = make("BR-3", "Bochner-Riesz and L2 restriction bounds for unions of VH line pieces",
                  Kind::constant_tracked, {3, 5, 7}, {3}, 40);
    s.baselines = {baseline("BR-3", "random_vh_line_unions", 3, 3, 400)};
    s.run = [](const Context& c) {
        if (c.d() != 3) return not_applicable("defined for d = 3");
        PrimeField F(c.p());
        int p = c.p();
        auto H = Surface::hyperbolic(F, 3);
        return worst_trial(c, c.params.trials, [&](int, Rng& rng) {
            auto U = vh_line_union(rng, F, 1 + rng.below(2 * p));
            auto Fn = random_on(rng, F, 3, U.idx);
            double alpha = logp(max_vh_plane_count(F, U.idx), p), beta = logp(U.min_piece, p);
            double nf = l2(Fn);
            double r1 = l2(bochner_riesz(Fn, *H, BRVariant::kernel_only)) /
                        (std::pow(double(p), (1.0 + alpha - beta) / 2.0) * nf);
            double r2 = surface_norm(restriction(Fn, H), 2.0) / (std::pow(double(p), (1.0 + alpha - beta) / 4.0) * nf);
            Trial tr;
            tr.metric = std::max(r1, r2);
            tr.info = {{"support", U.idx.size()}, {"alpha", alpha}, {"beta", beta}, {"bochner_riesz", r1},
                       {"restriction", r2}};
            tr.witness = Fn.data();
            return tr;
        });
    };
    return s;
}

Scenario mt1() {
    auto s = make("MT-1", "pseudo-conformal identity for slice convolutions", Kind::exact_identity, {5}, {3}, 100);
    s.run = [](const Context& c) {
        if (c.d() != 3) return not_applicable("defined for d = 3");
        PrimeField F(c.p());
        auto H = Surface::hyperbolic(F, 3);
        return worst_trial(c, c.params.trials, [&](int, Rng& rng) {
            FFunction h0(F, 2, random_values(rng, std::uint64_t(c.p()) * c.p()));
            Trial t;
            t.metric = pseudo_conformal_check(h0, *H);
            t.witness = h0.data();
            return t;
        });
    };
    return s;
}

// alpha of a slice: log_{|E_z|} of its largest intersection with a maximal isotropic coset.
double slice_alpha(const PointSet& Ez, const std::vector<Subspace>& iso) {
    if (Ez.size() <= 1 || iso.empty()) return Ez.size() <= 1 ? 1.0 : 0.0;
    int mx = max_coset_count(Ez, iso);
    return mx <= 1 ? 0.0 : std::log(double(mx)) / std::log(double(Ez.size()));
}

Scenario mt2() {
    auto s = make("MT-2", "L2 restriction bounds from slice extension norms and energy exponents",
                  Kind::constant_tracked, {3, 5}, {3}, 30);
    s.baselines = {baseline("MT-2", "random_sliced_sets", 3, 3, 300)};
    s.run = [](const Context& c) {
        int d = c.d();
        if (d % 2 == 0 || d < 3) return not_applicable("needs odd d >= 3");
        PrimeField F(c.p());
        int p = c.p(), m = d - 1, n = m / 2;
        auto P = Surface::paraboloid(F, d);
        std::vector<Subspace> iso;
        if (P->form().witt_index() > 0) iso = P->form().max_isotropic();
        std::uint64_t N = P->size();
        return worst_trial(c, c.params.trials, [&](int t, Rng& rng) {
            auto Z = random_subset(rng, p, 1 + rng.below(p));
            FFunction h(F, d);
            double alpha = -kInf, alphaE = 0.0;
            std::size_t total = 0;
            for (auto z : Z) {
                std::vector<std::uint64_t> idx;
                if (t % 2 == 1 && !iso.empty()) {
                    const auto& V = iso[rng.below(int(iso.size()))];
                    auto shift = rng.vec(p, m);
                    for (const auto& v : V.elements()) idx.push_back(encode(F.vadd(v, shift), p));
                } else {
                    idx = random_subset(rng, N, 1 + rng.below(int(N)));
                }
                SurfaceFunction hz(P);
                std::vector<FFVector> pts;
                for (auto i : idx) {
                    cd v = random_sim1(rng);
                    hz[i] = v;
                    h[i + N * z] = v;
                    pts.push_back(decode(i, p, m));
                }
                total += idx.size();
                alpha = std::max(alpha, logp(lp_norm(extension(hz), 4.0, Measure::counting), p));
                alphaE = std::max(alphaE, slice_alpha(PointSet(F, m, pts), iso));
            }
            Trial tr;
            double g = logp(double(total), p), sz = logp(double(Z.size()), p);
            if (g < 1.0) {
                tr.skip = true;
                return tr;
            }
            double lhs = surface_norm(restriction(h, P), 2.0);
            double tail = std::pow(double(p), g / 2.0);
            double b1 = std::pow(double(p), 3.0 * g / 8.0 + n / 2.0 + alpha / 2.0 + sz / 2.0) + tail;
            double psi = reference_psi(*P, alphaE);
            double b2 = std::pow(double(p), g * (3.0 + psi) / 8.0 + (4.0 - psi) / 8.0 - d / 8.0 + 0.25) + tail;
            tr.metric = std::max(lhs / b1, lhs / b2);
            tr.info = {{"gamma", g}, {"s", sz}, {"alpha_ext", alpha}, {"alpha_iso", alphaE}, {"psi", psi},
                       {"slice_bound_ratio", lhs / b1}, {"energy_bound_ratio", lhs / b2}};
            tr.witness = h.data();
            return tr;
        });
    };
    return s;
}

Scenario pl1() {
    auto s = make("PL-1", "transform of a function carried by a VH plane", Kind::exact_identity, {5}, {3}, 100);
    s.run = [](const Context& c) {
        if (c.d() != 3) return not_applicable("defined for d = 3");
        PrimeField F(c.p());
        return worst_trial(c, c.params.trials, [&](int, Rng& rng) {
            FFunction f(F, 2, random_values(rng, std::uint64_t(c.p()) * c.p()));
            int a = rng.below(c.p()), b = rng.below(c.p());
            Trial t;
            t.metric = plane_embed_ft_check(f, a, b);
            t.info = {{"a", a}, {"b", b}};
            t.witness = f.data();
            return t;
        });
    };
    return s;
}

// Pieces of a few VH planes, plus optional stray points.
std::vector<std::uint64_t> vh_plane_pieces(Rng& rng, const PrimeField& F, int planes, double density, int stray) {
    int p = F.p();
    auto all = all_vh_planes(F);
    std::vector<char> in(std::size_t(p) * p * p, 0);
    for (int k = 0; k < planes; ++k) {
        const auto& P = all[rng.below(int(all.size()))];
        for (std::uint64_t i = 0; i < in.size(); ++i)
            if (P.contains(F, decode(i, p, 3)) && rng.coin(density)) in[i] = 1;
    }
    for (int k = 0; k < stray; ++k) in[rng.below(int(in.size()))] = 1;
    std::vector<std::uint64_t> idx;
    for (std::uint64_t i = 0; i < in.size(); ++i)
        if (in[i]) idx.push_back(i);
    return idx;
}

PointSet as_pointset(const PrimeField& F, int d, const std::vector<std::uint64_t>& idx) {
    std::vector<FFVector> pts;
    for (auto i : idx) pts.push_back(decode(i, F.p(), d));
    return PointSet(F, d, pts);
}

Scenario pl2() {
    auto s = make("PL-2", "restriction bound in terms of planar entropy", Kind::constant_tracked, {3, 5}, {3}, 40);
    s.baselines = {baseline("PL-2", "random_vh_plane_pieces", 3, 3, 400)};
    s.run = [](const Context& c) {
        if (c.d() != 3) return not_applicable("defined for d = 3");
        PrimeField F(c.p());
        int p = c.p();
        auto H = Surface::hyperbolic(F, 3);
        return worst_trial(c, c.params.trials, [&](int, Rng& rng) {
            auto idx = vh_plane_pieces(rng, F, 1 + rng.below(p + 1), rng.uniform(0.2, 1.0), rng.below(p));
            Trial tr;
            if (idx.empty()) {
                tr.skip = true;
                return tr;
            }
            auto Fn = random_on(rng, F, 3, idx);
            double g = logp(double(idx.size()), p);
            double e = planar_entropy_greedy(as_pointset(F, 3, idx));
            auto Fh = restriction(Fn, H);
            double worst = 0.0;
            json per = json::object();
            for (double pl : {1.0, 1.5, 2.0}) {
                double lhs = surface_norm(Fh, pl);
                double main = g <= 2.0 ? std::pow(double(p), g - 1.0 / pl)
                                       : std::pow(double(p), 2.0 + (g - 2.0) / pl - 1.0 / pl);
                double rhs = main + std::pow(double(p), g / 2.0 + e / 2.0);
                per["p=" + std::to_string(pl).substr(0, 3)] = lhs / rhs;
                worst = std::max(worst, lhs / rhs);
            }
            tr.metric = worst;
            tr.info = {{"gamma", g}, {"entropy", e}, {"ratios", per}};
            tr.witness = Fn.data();
            return tr;
        });
    };
    return s;
}

Scenario pl3() {
    auto s = make("PL-3", "sharp restriction estimate for level sets of low planar entropy",
                  Kind::constant_tracked, {3, 5}, {3}, 40);
    s.baselines = {baseline("PL-3", "random_vh_plane_pieces", 3, 3, 400)};
    s.run = [](const Context& c) {
        if (c.d() != 3) return not_applicable("defined for d = 3");
        PrimeField F(c.p());
        int p = c.p();
        const double pe = 9.0 / 5.0, q = 18.0 / 13.0;
        auto H = Surface::hyperbolic(F, 3);
        return worst_trial(c, c.params.trials, [&](int, Rng& rng) {
            auto idx = vh_plane_pieces(rng, F, 1 + rng.below(2), rng.uniform(0.2, 1.0), 0);
            Trial tr;
            double g = idx.empty() ? 0.0 : logp(double(idx.size()), p);
            double e = idx.empty() ? 0.0 : planar_entropy_greedy(as_pointset(F, 3, idx));
            double limit = g < 2.0 ? g * (pe - 1.0) / pe : 2.0 * (pe - 1.0) / pe;
            if (idx.empty() || std::abs(g - 2.0) < 1e-12 || e > limit + 1e-12) {
                tr.skip = true;
                return tr;
            }
            FFunction Fn(F, 3);
            double v = std::pow(double(idx.size()), -1.0 / q);
            for (auto i : idx) Fn[i] = v;
            tr.metric = surface_norm(restriction(Fn, H), pe);
            tr.info = {{"gamma", g}, {"entropy", e}, {"regime", g < 2.0 ? "large_values" : "small_values"}};
            tr.witness = Fn.data();
            return tr;
        });
    };
    return s;
}

}  // namespace

void add_fourier_scenarios(std::vector<Scenario>& out) {
    for (auto f : {ft1, ft2, ft3, st1, st2, st3, st4, st5, st6, eq1, br1, br2, br3, mt1, mt2, pl1, pl2, pl3})
        out.push_back(f());
}

} // namespace fflab::harness
