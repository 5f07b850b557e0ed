// EN, IN, QF and EX scenario families.
#include <algorithm>
#include <atomic>
#include <cmath>

#include "common.hpp"
#include "fflab/combinatorics/energy.hpp"
#include "fflab/combinatorics/energy_exponent.hpp"
#include "fflab/combinatorics/incidence.hpp"
#include "fflab/combinatorics/pointset.hpp"

namespace fflab::harness {

namespace {

// Parameters of H for the bits of mask over the p^2 parameter points.
std::vector<FFVector> params_from_mask(int p, std::uint64_t mask) {
    std::vector<FFVector> out;
    for (int i = 0; i < p * p; ++i)
        if (mask >> i & 1) out.push_back({i % p, i / p});
    return out;
}

std::vector<FFVector> random_params(Rng& rng, const Surface& S, std::uint64_t k) {
    std::vector<FFVector> out;
    for (auto i : random_subset(rng, S.size(), k)) out.push_back(decode(i, S.p(), S.param_dim()));
    return out;
}

// Parameters on H* (both coordinates nonzero).
std::vector<FFVector> random_star_params(Rng& rng, int p, std::uint64_t k) {
    std::uint64_t n = std::uint64_t(p - 1) * (p - 1);
    std::vector<FFVector> out;
    for (auto i : random_subset(rng, n, k)) out.push_back({1 + int(i % (p - 1)), 1 + int(i / (p - 1))});
    return out;
}

// Pieces of VH lines in the parameter plane of H; large line concentration on purpose.
std::vector<FFVector> vh_heavy_params(Rng& rng, int p) {
    std::vector<char> in(std::size_t(p) * p, 0);
    int lines = 1 + rng.below(3);
    for (int l = 0; l < lines; ++l) {
        int type = rng.below(2), c = rng.below(p);
        for (int s = 0; s < p; ++s)
            if (rng.coin(0.8)) in[type == 0 ? c + std::size_t(p) * s : s + std::size_t(p) * c] = 1;
    }
    std::vector<FFVector> out;
    for (std::size_t i = 0; i < in.size(); ++i)
        if (in[i]) out.push_back({int(i % p), int(i / p)});
    return out;
}

Scenario en1() {
    auto s = make("EN-1", "additive energy by Fourier identity equals direct quadruple count", Kind::exact_identity,
                  {3, 5, 7}, {3}, 200);
    s.metric_name = "mismatches";
    s.run = [](const Context& c) {
        PrimeField F(c.p());
        int p = c.p(), d = c.d();
        auto S = default_surface(F, d);
        std::uint64_t N = checked_size(p, d, "prime^dim");
        int n = c.params.trials;
        bool hsubsets = p == 3 && d == 3;
        std::uint64_t total = n + (hsubsets ? 512 : 0);
        std::vector<char> bad(total, 0);
        parallel_for(total, [&](std::uint64_t i) {
            PointSet E(F, d);
            if (i < std::uint64_t(n)) {
                Rng rng(c.trial_seed(i));
                std::uint64_t k = 1 + rng.below(int(std::min<std::uint64_t>(N, 3 * p)));
                if (i % 2 == 0) {
                    std::vector<FFVector> pts;
                    for (auto j : random_subset(rng, N, k)) pts.push_back(decode(j, p, d));
                    E = PointSet(F, d, pts);
                } else {
                    E = lift_to_surface(*S, random_params(rng, *S, k));
                }
            } else {
                E = lift_to_surface(*S, params_from_mask(3, i - n));
            }
            auto loop = additive_energy(E, EnergyMethod::quadruple_loop);
            bad[i] = loop != additive_energy(E, EnergyMethod::fourier) ||
                     loop != additive_energy(E, EnergyMethod::sum_count);
        });
        Outcome o;
        std::uint64_t mism = 0;
        for (std::uint64_t i = 0; i < total; ++i) {
            if (bad[i] && !o.details.contains("first_mismatch")) o.details["first_mismatch"] = i;
            mism += bad[i];
        }
        o.metric = double(mism);
        o.details["random_sets"] = n;
        o.details["surface_subsets"] = hsubsets ? 512 : 0;
        return o;
    };
    return s;
}

Scenario en2() {
    auto s = make("EN-2", "energy bound by the 5/2 power plus cubes of VH line counts", Kind::constant_tracked,
                  {3, 5, 7}, {3}, 100);
    s.baselines = {baseline("EN-2", "exhaustive_surface_subsets_p3", 3, 3, 512)};
    s.run = [](const Context& c) {
        if (c.d() != 3) return not_applicable("defined for d = 3");
        PrimeField F(c.p());
        int p = c.p();
        auto H = Surface::hyperbolic(F, 3);
        bool exhaustive = c.oracle && p == 3;
        return worst_trial(c, exhaustive ? 512 : c.params.trials, [&](int t, Rng& rng) {
            std::vector<FFVector> pr;
            if (exhaustive) pr = params_from_mask(3, std::uint64_t(t));
            else if (t % 3 == 2) pr = vh_heavy_params(rng, p);
            else pr = random_params(rng, *H, 1 + rng.below(p * p));
            Trial tr;
            if (pr.empty()) {
                tr.skip = true;
                return tr;
            }
            auto r = energy_bound_l52(lift_to_surface(*H, pr));
            tr.metric = r.ratio;
            tr.info = {{"size", pr.size()}, {"energy", r.energy}, {"bound", r.bound}};
            return tr;
        });
    };
    return s;
}

Scenario en3() {
    auto s = make("EN-3", "off-diagonal energy on the punctured hyperbolic paraboloid", Kind::constant_tracked,
                  {3, 5, 7}, {3}, 100);
    s.baselines = {baseline("EN-3", "exhaustive_punctured_subsets_p3", 3, 3, 16)};
    s.run = [](const Context& c) {
        if (c.d() != 3) return not_applicable("defined for d = 3");
        PrimeField F(c.p());
        int p = c.p();
        auto H = Surface::hyperbolic(F, 3);
        bool exhaustive = c.oracle && p == 3;
        return worst_trial(c, exhaustive ? 16 : c.params.trials, [&](int t, Rng& rng) {
            std::vector<FFVector> pr;
            if (exhaustive) {
                for (int b = 0; b < 4; ++b)
                    if (t >> b & 1) pr.push_back({1 + b % 2, 1 + b / 2});
            } else {
                pr = random_star_params(rng, p, 1 + rng.below((p - 1) * (p - 1)));
            }
            Trial tr;
            if (pr.empty()) {
                tr.skip = true;
                return tr;
            }
            double n = double(pr.size());
            auto e = energy_star(lift_to_surface(*H, pr));
            tr.metric = double(e) / std::pow(n, 2.5);
            tr.info = {{"size", pr.size()}, {"energy_star", e}};
            return tr;
        });
    };
    return s;
}

Scenario en4() {
    auto s = make("EN-4", "L4 extension bound for VH-spread sets", Kind::constant_tracked, {3, 5, 7}, {3}, 100);
    s.baselines = {baseline("EN-4", "exhaustive_surface_indicators_p3", 3, 3, 512)};
    s.run = [](const Context& c) {
        if (c.d() != 3) return not_applicable("defined for d = 3");
        PrimeField F(c.p());
        int p = c.p();
        auto H = Surface::hyperbolic(F, 3);
        CharacterTable chi(p);
        bool exhaustive = c.oracle && p == 3;
        return worst_trial(c, exhaustive ? 512 : c.params.trials, [&](int t, Rng& rng) {
            std::vector<FFVector> pr;
            if (exhaustive) pr = params_from_mask(3, std::uint64_t(t));
            else pr = random_params(rng, *H, 1 + rng.below(p * p));
            Trial tr;
            auto E = lift_to_surface(*H, pr);
            double n = double(pr.size());
            if (pr.empty() || vh_profile(E).max_line > std::pow(n, 0.75) + 1e-9) {
                tr.skip = true;
                return tr;
            }
            SurfaceFunction f(H);
            for (const auto& x : pr) f[encode(x, p)] = exhaustive ? cd(1.0) : rng.phase(chi);
            double l4 = lp_norm(extension(f), 4.0, Measure::counting);
            tr.metric = std::pow(l4, 4.0) / (std::pow(double(p), -5.0) * std::pow(n, 2.5));
            tr.info = {{"size", pr.size()}, {"max_line", vh_profile(E).max_line}};
            tr.witness = f.values();
            return tr;
        });
    };
    return s;
}

Scenario in1() {
    auto s = make("IN-1", "energy controlled by incidences after a Galilean shift", Kind::constant_tracked,
                  {3, 5, 7}, {3}, 60);
    s.baselines = {baseline("IN-1", "random_surface_pairs", 3, 3, 600)};
    s.run = [](const Context& c) {
        PrimeField F(c.p());
        auto S = default_surface(F, c.d());
        std::uint64_t N = S->size();
        return worst_trial(c, c.params.trials, [&](int, Rng& rng) {
            auto A = random_params(rng, *S, 1 + rng.below(int(std::min<std::uint64_t>(N, 40))));
            auto B = random_params(rng, *S, 1 + rng.below(int(std::min<std::uint64_t>(N, 40))));
            auto r = energy_to_incidence(*S, A, B);
            Trial tr;
            tr.metric = r.ratio;
            tr.info = {{"A", A.size()}, {"B", B.size()}, {"energy", r.energy}, {"incidences", r.incidences}};
            return tr;
        });
    };
    return s;
}

Scenario in2() {
    auto s = make("IN-2", "double counting incidence bound", Kind::exact_identity, {3, 5, 7}, {3}, 60);
    s.metric_name = "max_excess";
    s.run = [](const Context& c) {
        PrimeField F(c.p());
        int p = c.p(), n = c.d() - 1;
        if (n < 1) return not_applicable("needs d >= 2");
        std::uint64_t N = checked_size(p, n, "prime^(dim-1)");
        return worst_trial(c, c.params.trials, [&](int t, Rng& rng) {
            std::vector<FFVector> pts;
            for (auto i : random_subset(rng, N, 1 + rng.below(int(N)))) pts.push_back(decode(i, p, n));
            PointSet P(F, n, pts);
            HyperplaneFamily L;
            int count = 1 + rng.below(int(2 * N));
            bool distinct = t % 2 == 0;
            for (int k = 0; k < count; ++k) {
                FFVector nv = rng.vec(p, n);
                if (std::all_of(nv.begin(), nv.end(), [](int v) { return v == 0; })) nv[0] = 1;
                auto h = make_hyperplane(F, nv, rng.below(p));
                if (distinct) L.items[h] = 1;
                else L.add(h, 1 + rng.below(3));
            }
            auto dc = doublecount(P, L);
            double excess = double(dc.incidences) / dc.bound - 1.0;
            double cs = -1.0;
            if (distinct && n == 2) {
                double M = double(std::max<std::uint64_t>(P.size(), L.total()));
                cs = double(dc.incidences) / (2.0 * std::pow(M, 1.5)) - 1.0;
            }
            Trial tr;
            tr.metric = std::max({0.0, excess, cs});
            tr.info = {{"points", P.size()}, {"lines", L.total()}, {"incidences", dc.incidences},
                       {"C1", dc.C1}, {"C2", dc.C2}, {"bound", dc.bound}};
            return tr;
        });
    };
    return s;
}

Scenario qf1() {
    auto s = make("QF-1", "Witt index classification against exhaustive isotropic search", Kind::exact_identity,
                  {3, 5, 7}, {2, 4}, 1);
    s.metric_name = "mismatches";
    s.run = [](const Context& c) {
        PrimeField F(c.p());
        int p = c.p(), m = c.d();
        if (m < 1 || m > 4) return not_applicable("form dimension must be 1..4");
        std::uint64_t total = checked_size(p - 1, m, "(prime-1)^dim");
        std::vector<char> bad(total, 0);
        std::vector<int> witt(total, 0);
        parallel_for(total, [&](std::uint64_t i) {
            std::vector<int> diag(m);
            std::uint64_t r = i;
            for (auto& x : diag) {
                x = 1 + int(r % (p - 1));
                r /= (p - 1);
            }
            auto Q = QuadraticSpace::diagonal(F, diag);
            int ex = witt_index_exhaustive(Q);
            witt[i] = ex;
            bad[i] = witt_index(Q) != ex || witt_from_diagonal(F, diag) != ex;
        });
        Outcome o;
        std::vector<int> hist(m / 2 + 1, 0);
        for (std::uint64_t i = 0; i < total; ++i) {
            o.metric += bad[i];
            ++hist[witt[i]];
        }
        o.details["forms"] = total;
        o.details["witt_histogram"] = hist;
        return o;
    };
    return s;
}

Scenario qf2() {
    auto s = make("QF-2", "complementary isotropic subspace with dual bases", Kind::exact_identity, {3, 5, 7}, {2, 4},
                  100);
    s.metric_name = "violations";
    s.run = [](const Context& c) {
        PrimeField F(c.p());
        int m = c.d(), p = c.p();
        if (m % 2 != 0 || m > 4) return not_applicable("form dimension must be 2 or 4");
        auto Hq = QuadraticSpace::hyperbolic(F, m);
        return worst_trial(c, c.params.trials, [&](int, Rng& rng) {
            Mat M;
            for (;;) {
                M = Mat(m, m);
                for (auto& x : M.a) x = rng.below(p);
                if (det(F, M) != 0) break;
            }
            QuadraticSpace Q(F, mul(F, transpose(M), mul(F, Hq.matrix(), M)));
            const auto& iso = Q.max_isotropic();
            const auto& W = iso[rng.below(int(iso.size()))];
            auto ic = complementary_isotropic(Q, W);
            int n = m / 2, viol = 0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) viol += Q.bilinear(ic.w_basis[i], ic.v_basis[j]) != (i == j ? 1 : 0);
            viol += !Q.totally_isotropic(ic.V);
            viol += !complementary(W, ic.V);
            viol += !(Subspace(F, m, ic.w_basis) == W);
            Trial tr;
            tr.metric = viol;
            tr.info = {{"W_dim", W.dim()}};
            return tr;
        });
    };
    return s;
}

Scenario qf3() {
    auto s = make("QF-3", "character average over a subspace is the indicator of its orthogonal complement",
                  Kind::exact_identity, {3}, {4}, 1);
    s.run = [](const Context& c) {
        PrimeField F(c.p());
        int m = c.d();
        std::vector<Subspace> all;
        for (int k = 0; k <= m; ++k)
            for (auto& W : enumerate_subspaces(F, m, k)) all.push_back(W);
        auto pts = enumerate_points(F, m);
        Outcome o;
        std::vector<QuadraticSpace> forms{QuadraticSpace::sum_of_squares(F, m)};
        if (m % 2 == 0) forms.push_back(QuadraticSpace::hyperbolic(F, m));
        for (const auto& Q : forms) {
            std::vector<double> dev(all.size(), 0.0);
            parallel_for(all.size(), [&](std::uint64_t i) {
                auto perp = orthogonal_complement(Q, all[i]);
                for (const auto& x : pts)
                    dev[i] = std::max(dev[i], std::abs(expoc_indicator(Q, all[i], x) - (perp.contains(x) ? 1.0 : 0.0)));
            });
            for (double v : dev) o.metric = std::max(o.metric, v);
        }
        o.details["subspaces"] = all.size();
        return o;
    };
    return s;
}

Scenario qf4() {
    auto s = make("QF-4", "classification of codimension-two restricted forms", Kind::exact_identity, {3, 5}, {5}, 1);
    s.metric_name = "violations";
    s.run = [](const Context& c) {
        PrimeField F(c.p());
        int d = c.d(), m = d - 1;
        if (d % 2 == 0 || d < 5) return not_applicable("needs odd d >= 5");
        int ns = 2;
        while (F.is_square(ns)) ++ns;
        std::vector<int> twisted(m, 1);
        twisted[m - 1] = ns;
        auto subs = enumerate_subspaces(F, m, d - 3);
        Outcome o;
        json seen = json::object();
        for (auto Q : {QuadraticSpace::sum_of_squares(F, m), QuadraticSpace::hyperbolic(F, m),
                       QuadraticSpace::diagonal(F, twisted)}) {
            bool plus = Q.witt_index() == m / 2;
            std::vector<int> bad(subs.size(), 0);
            std::vector<SubsurfaceClass> cls(subs.size());
            parallel_for(subs.size(), [&](std::uint64_t i) {
                try {
                    cls[i] = classify_subsurface(Q, subs[i]);
                } catch (const FullyDegenerate&) {
                    cls[i] = SubsurfaceClass{0, d - 3, 0};  // totally isotropic, outside the table
                    return;
                }
                if (cls[i].r > 0) bad[i] = !subsurface_allowed(d, plus, cls[i]);
            });
            for (std::size_t i = 0; i < subs.size(); ++i) {
                o.metric += bad[i];
                std::string key = std::string(plus ? "plus" : "minus") + ":" + std::to_string(cls[i].r) + "," +
                                  std::to_string(cls[i].s) + "," + std::to_string(cls[i].w);
                seen[key] = seen.value(key, 0) + 1;
            }
        }
        o.details["subspaces_per_form"] = subs.size();
        o.details["classes"] = seen;
        return o;
    };
    return s;
}

Scenario ex1() {
    auto s = make("EX-1", "closed-form energy exponents", Kind::exponent_arith, {3}, {3}, 1);
    s.run = [](const Context&) {
        struct Check {
            const char* name;
            double got, want;
        } checks[] = {
            {"dim3_witt1(3/4)", energy_exponent_closed(ExponentKind::dim3_witt1, 0.75), 2.5},
            {"dim5_witt2(9/16)", energy_exponent_closed(ExponentKind::dim5_witt2, 9.0 / 16.0), 23.0 / 8.0},
            {"dim2(1/2)", energy_exponent_closed(ExponentKind::dim2, 0.5), 2.0},
            {"lift(5/2, 0)", degenerate_lift(2.5, 0.0), 2.5},
            {"lift(5/2, 3/4)", degenerate_lift(2.5, 0.75), 23.0 / 8.0},
            {"lift(2, 1)", degenerate_lift(2.0, 1.0), 3.0},
        };
        Outcome o;
        for (const auto& ch : checks) {
            o.details[ch.name] = {{"value", ch.got}, {"expected", ch.want}};
            o.metric = std::max(o.metric, std::abs(ch.got - ch.want));
        }
        bool threw = false;
        try {
            energy_exponent_closed(ExponentKind::dim5_witt2, 0.5);
        } catch (const OutOfValidityRange&) {
            threw = true;
        }
        o.details["out_of_range_rejected"] = threw;
        if (!threw) o.metric = std::max(o.metric, 1.0);
        return o;
    };
    return s;
}

Scenario ex2() {
    auto s = make("EX-2", "energy exponent recursion is monotone and reaches 3 at alpha = 1", Kind::exponent_arith,
                  {3}, {5}, 1);
    s.run = [](const Context&) {
        auto grid = uniform_grid(64);
        auto inner = exponent_from_closed(ExponentKind::dim5_witt2, grid);
        auto out = recurse_grid(inner, grid);
        double drop = 0.0;
        for (std::size_t i = 1; i < out.psi.size(); ++i) drop = std::max(drop, out.psi[i - 1] - out.psi[i]);
        double end = std::abs(out(1.0) - 3.0);
        Outcome o;
        o.metric = std::max(drop, end);
        o.details["max_decrease"] = drop;
        o.details["psi_at_0"] = out.psi.front();
        o.details["psi_at_1"] = out(1.0);
        o.details["invariants"] = out.satisfies_invariants();
        return o;
    };
    return s;
}

Scenario ex3() {
    auto s = make("EX-3", "empirical energy exponents against the reference curve", Kind::exponent_arith, {3, 5},
                  {3}, 40);
    s.tolerance = 0.2;
    s.metric_name = "max_excess";
    s.run = [](const Context& c) {
        if (c.d() > 5 || c.p() > 7) return not_applicable("scatter is limited to d <= 5, p <= 7");
        auto S = default_surface(PrimeField(c.p()), c.d());
        auto samples = empirical_alpha_energy(S, c.params.trials, c.trial_seed(0));
        Outcome o;
        o.metric = -kInf;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < samples.size(); ++i) {
            if (samples[i].size < 2) continue;
            double ex = samples[i].exponent - samples[i].curve;
            if (ex > o.metric) {
                o.metric = ex;
                worst = i;
            }
        }
        if (!std::isfinite(o.metric)) return not_applicable("no sample with at least two points");
        const auto& w = samples[worst];
        o.details["samples"] = samples.size();
        o.details["worst"] = {{"family", w.family}, {"size", w.size}, {"alpha", w.alpha}, {"exponent", w.exponent},
                              {"curve", w.curve}};
        return o;
    };
    return s;
}

}  // namespace

void add_combinatorics_scenarios(std::vector<Scenario>& out) {
    for (auto f : {en1, en2, en3, en4, in1, in2, qf1, qf2, qf3, qf4, ex1, ex2, ex3}) out.push_back(f());
}

} // namespace fflab::harness
