// KK and MX scenario families.
#include <algorithm>
#include <cmath>
#include <set>

#include "common.hpp"
#include "fflab/fourier/exponents.hpp"
#include "fflab/fourier/transform.hpp"
#include "fflab/kakeya/kakeya.hpp"

namespace fflab::harness {

namespace {

FFunction indicator_of(const PrimeField& F, int m, const std::vector<char>& member) {
    FFunction f(F, m);
    for (std::uint64_t i = 0; i < f.size(); ++i) f[i] = member[i] ? 1.0 : 0.0;
    return f;
}

Scenario kk1() {
    auto s = make("KK-1", "Kakeya maximal function bound in the plane", Kind::constant_tracked, {3, 5, 7, 11, 13},
                  {2}, 60);
    s.baselines = {baseline("KK-1", "exhaustive_indicators_p3", 3, 2, 512)};
    s.run = [](const Context& c) {
        int m = c.d();
        if (m < 2) return not_applicable("needs m >= 2");
        PrimeField F(c.p());
        int p = c.p();
        std::uint64_t N = checked_size(p, m, "prime^dim");
        bool exhaustive = c.oracle && p == 3 && m == 2;
        return worst_trial(c, exhaustive ? 512 : c.params.trials, [&](int t, Rng& rng) {
            FFunction f(F, m);
            std::string family;
            if (exhaustive) {
                for (std::uint64_t i = 0; i < N; ++i) f[i] = (t >> i & 1) ? 1.0 : 0.0;
                family = "indicator";
            } else {
                switch (t % 4) {
                case 0:
                    for (auto i : random_subset(rng, N, 1 + rng.below(int(N)))) f[i] = 1.0;
                    family = "random_indicator";
                    break;
                case 1: {
                    auto K = build_kakeya(F, m, t % 8 == 1 ? KakeyaConstruction::random : KakeyaConstruction::quadratic,
                                          rng.next());
                    f = indicator_of(F, m, K.member);
                    family = "kakeya_set";
                    break;
                }
                case 2: {
                    // union of a few full lines
                    int lines = 1 + rng.below(p);
                    for (int l = 0; l < lines; ++l) {
                        AffineLine L{rng.vec(p, m - 1), rng.vec(p, m - 1)};
                        for (const auto& x : L.points(F)) f.at(x) = 1.0;
                    }
                    family = "line_union";
                    break;
                }
                default:
                    for (auto& z : f.data()) z = rng.unit();
                    family = "random_values";
                }
            }
            Trial tr;
            if (lp_norm(f, 1.0, Measure::counting) == 0.0) {
                tr.skip = true;
                return tr;
            }
            tr.metric = eot_ratio(f);
            tr.info = {{"family", family}};
            tr.witness = f.data();
            return tr;
        });
    };
    return s;
}

Scenario kk2() {
    auto s = make("KK-2", "maximal and dual Kakeya norms agree", Kind::exact_identity, {3, 5}, {2, 3}, 1);
    s.tolerance = 1e-6;
    s.metric_name = "duality_gap";
    s.run = [](const Context& c) {
        int m = c.d();
        if (m < 2) return not_applicable("needs m >= 2");
        PrimeField F(c.p());
        Outcome o;
        double r = 2.0 * m - 1.0;
        for (int t = 0; t < c.params.trials; ++t) {
            auto res = kakeya_duality(F, m, r, c.trial_seed(t));
            o.metric = std::max(o.metric, res.gap);
            o.details["trial_" + std::to_string(t)] = {{"maximal_ratio", res.maximal_ratio},
                                                       {"dual_ratio", res.dual_ratio},
                                                       {"rounds", res.rounds},
                                                       {"power_reference", std::pow(double(c.p()), (m - 1.0) / r)}};
        }
        o.details["r"] = r;
        return o;
    };
    return s;
}

Scenario kk3() {
    auto s = make("KK-3", "restriction estimates imply Kakeya estimates through an explicit embedding",
                  Kind::exact_identity, {3, 5}, {3}, 100);
    s.run = [](const Context& c) {
        int d = c.d();
        if (d % 2 == 0 || d < 3) return not_applicable("needs odd d >= 3");
        PrimeField F(c.p());
        int p = c.p(), n = (d - 1) / 2, m = n + 1;
        auto H = Surface::hyperbolic(F, d);
        double e = (2.0 * m - 1.0) / (2.0 * m - 2.0);
        std::uint64_t nd = checked_size(p, n, "prime^n");
        return worst_trial(c, c.params.trials, [&](int t, Rng& rng) {
            std::vector<double> h(nd);
            for (auto& v : h) v = rng.coin(0.25) ? 0.0 : rng.unit();
            std::vector<FFVector> b(nd, FFVector(n, 0));
            if (t > 0)
                for (auto& v : b) v = rng.vec(p, n);
            auto r = restriction_to_kakeya_check(h, b, H, e, e);
            Trial tr;
            tr.metric = std::max({r.closed_form_dev, r.collapse_dev, r.chain_ok ? 0.0 : 1.0});
            tr.info = {{"closed_form_deviation", r.closed_form_dev}, {"collapse_deviation", r.collapse_dev},
                       {"dual_ratio", r.dual_ratio}, {"chain_rhs", r.chain_rhs}, {"chain_ok", r.chain_ok}};
            for (double v : h) tr.witness.push_back(v);
            return tr;
        });
    };
    return s;
}

Scenario kk4() {
    auto s = make("KK-4", "Kakeya set constructions and their densities", Kind::constant_tracked, {3, 5, 7}, {2, 3}, 1);
    s.lower_bound = true;
    s.metric_name = "min_density";
    s.baselines = {baseline("KK-4/m=2", "exhaustive_line_choices_p3", 3, 2, 1),
                   baseline("KK-4/m=3", "local_search_p3", 3, 3, 1)};
    s.run = [](const Context& c) {
        int m = c.d();
        if (m < 2 || m > 3) return not_applicable("constructions are audited for m = 2, 3");
        PrimeField F(c.p());
        Outcome o;
        if (c.oracle && c.p() == 3 && m == 2) {
            o.metric = exhaustive_min_kakeya_density(F, m);
            o.details["source"] = "exhaustive";
            return o;
        }
        o.metric = kInf;
        bool all_kakeya = true;
        for (auto k : {KakeyaConstruction::full, KakeyaConstruction::quadratic, KakeyaConstruction::random,
                       KakeyaConstruction::local_search}) {
            auto K = build_kakeya(F, m, k, c.trial_seed(0));
            auto a = kakeya_set_audit(F, K);
            all_kakeya = all_kakeya && a.is_kakeya;
            o.details[to_string(k)] = {{"density", a.density}, {"is_kakeya", a.is_kakeya},
                                       {"missing_directions", a.missing_directions}};
            o.metric = std::min(o.metric, a.density);
        }
        double fact = m == 2 ? 2.0 : 6.0;
        o.details["factorial_envelope"] = 1.0 / fact;
        if (!all_kakeya) {
            o.metric = 0.0;
            o.note = "a construction missed a direction";
        }
        return o;
    };
    return s;
}

// Maximal isotropic W and a complementary isotropic V of the surface form, if the Witt index is full.
std::optional<std::pair<Subspace, Subspace>> isotropic_pair(const Surface& S, Rng& rng) {
    const auto& Q = S.form();
    int m = S.param_dim();
    if (m % 2 != 0 || Q.witt_index() != m / 2) return std::nullopt;
    const auto& iso = Q.max_isotropic();
    const auto& W = iso[rng.below(int(iso.size()))];
    auto ic = complementary_isotropic(Q, W);
    return std::make_pair(W, ic.V);
}

Scenario mx1() {
    auto s = make("MX-1", "extension in coordinates adapted to complementary isotropic subspaces",
                  Kind::exact_identity, {3, 5, 7}, {3}, 10);
    s.run = [](const Context& c) {
        int d = c.d();
        if (d % 2 == 0 || d < 3) return not_applicable("needs odd d >= 3");
        PrimeField F(c.p());
        int n = (d - 1) / 2, m = d - 1;
        auto P = Surface::paraboloid(F, d), H = Surface::hyperbolic(F, d);
        std::vector<FFVector> e1, e2;
        for (int i = 0; i < n; ++i) {
            FFVector a(m, 0), b(m, 0);
            a[i] = 1;
            b[n + i] = 1;
            e1.push_back(a);
            e2.push_back(b);
        }
        Subspace X1(F, m, e1), X2(F, m, e2);
        return worst_trial(c, c.params.trials, [&](int, Rng& rng) {
            Trial tr;
            SurfaceFunction g(H, random_values(rng, H->size()));
            double dh = max_abs_diff(coset_extension(g, X1, X2).data(), extension(g).data());
            tr.metric = dh;
            tr.info["hyperbolic"] = dh;
            if (auto wv = isotropic_pair(*P, rng)) {
                SurfaceFunction f(P, random_values(rng, P->size()));
                double dp = max_abs_diff(coset_extension(f, wv->first, wv->second).data(), extension(f).data());
                tr.metric = std::max(tr.metric, dp);
                tr.info["paraboloid"] = dp;
            }
            tr.witness = g.values();
            return tr;
        });
    };
    return s;
}

Scenario mx2() {
    auto s = make("MX-2", "mixed-norm extension estimate over complementary isotropic subspaces",
                  Kind::constant_tracked, {5, 13}, {3, 5}, 30);
    s.baselines = {baseline("MX-2/d=3", "single_and_random_caps", 5, 3, 300),
                   baseline("MX-2/d=5", "single_and_random_caps", 3, 5, 200)};
    s.run = [](const Context& c) {
        int d = c.d();
        PrimeField F(c.p());
        int p = c.p(), m = d - 1;
        if (d % 2 == 0 || d < 3) return not_applicable("needs odd d >= 3");
        auto P = Surface::paraboloid(F, d);
        if (P->form().witt_index() != m / 2) return not_applicable("the paraboloid form has no complementary isotropic pair");
        double r = stein_tomas_exponent(d);
        return worst_trial(c, c.params.trials, [&](int t, Rng& rng) {
            auto wv = *isotropic_pair(*P, rng);
            const auto& [W, V] = wv;
            FFunction f(F, m);
            std::string family;
            auto fill_coset = [&](const FFVector& shift) {
                for (const auto& w : W.elements()) f.at(F.vadd(w, shift)) = random_sim1(rng);
            };
            switch (t % 3) {
            case 0:
                fill_coset(rng.vec(p, m));
                family = "single_cap";
                break;
            case 1: {
                int k = 1 + rng.below(p);
                for (int i = 0; i < k; ++i) fill_coset(rng.vec(p, m));
                family = "few_caps";
                break;
            }
            default:
                f.data() = random_values(rng, f.size());
                family = "random";
            }
            SurfaceFunction g(P, f.data());
            MixedNormSpec ext_spec{V, W, r, 2.0, true}, in_spec{V, W, r, 2.0, false};
            double lhs = mixed_norm(extension(g), ext_spec, Measure::counting);
            double rhs = mixed_norm(f, in_spec, Measure::normalized);
            Trial tr;
            tr.metric = lhs / rhs;
            tr.info = {{"family", family}, {"lhs", lhs}, {"rhs", rhs}};
            tr.witness = f.data();
            return tr;
        });
    };
    return s;
}

Scenario mx3() {
    auto s = make("MX-3", "restriction bound for slices made of few isotropic coset pieces",
                  Kind::constant_tracked, {3, 5, 13}, {3, 5}, 30);
    s.baselines = {baseline("MX-3/d=3", "random_isotropic_slices", 5, 3, 300),
                   baseline("MX-3/d=5", "random_isotropic_slices", 3, 5, 200)};
    s.run = [](const Context& c) {
        int d = c.d();
        PrimeField F(c.p());
        int p = c.p(), m = d - 1;
        if (d % 2 == 0 || d < 3) return not_applicable("needs odd d >= 3");
        auto P = Surface::paraboloid(F, d);
        if (P->form().witt_index() != m / 2) return not_applicable("the paraboloid form has no complementary isotropic pair");
        const auto& iso = P->form().max_isotropic();
        std::uint64_t N = P->size();
        double pe = (2.0 * d + 2.0) / (d + 3.0);
        return worst_trial(c, c.params.trials, [&](int, Rng& rng) {
            FFunction Fn(F, d);
            auto Z = random_subset(rng, p, 1 + rng.below(p));
            int maxA = 0;
            std::uint64_t total = 0;
            for (auto z : Z) {
                std::set<Subspace> used;
                std::vector<char> taken(N, 0);
                int k = 1 + rng.below(p);
                for (int j = 0; j < k; ++j) {
                    Subspace omega = iso[rng.below(int(iso.size()))].shifted(rng.vec(p, m));
                    if (!used.insert(omega).second) continue;
                    bool any = false;
                    for (const auto& x : omega.elements()) {
                        std::uint64_t i = encode(x, p);
                        if (taken[i] || !rng.coin(0.7)) continue;
                        taken[i] = 1;
                        any = true;
                        Fn[i + N * z] = random_sim1(rng);
                        ++total;
                    }
                    if (!any) used.erase(omega);
                }
                maxA = std::max(maxA, int(used.size()));
            }
            Trial tr;
            if (total == 0) {
                tr.skip = true;
                return tr;
            }
            double g = logp(double(total), p), e = logp(std::max(1, maxA), p);
            double lhs = surface_norm(restriction(Fn, P), pe);
            double rhs = std::pow(double(p), g / 2.0 + (e + 1.0) / (d + 1.0) + (d - 3.0) / (2.0 * d + 2.0));
            tr.metric = lhs / rhs;
            tr.info = {{"gamma", g}, {"pieces_exponent", e}, {"lhs", lhs}, {"rhs", rhs}};
            tr.witness = Fn.data();
            return tr;
        });
    };
    return s;
}

}  // namespace

void add_kakeya_scenarios(std::vector<Scenario>& out) {
    for (auto f : {kk1, kk2, kk3, kk4, mx1, mx2, mx3}) out.push_back(f());
}

} // namespace fflab::harness
