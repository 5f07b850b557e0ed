#include <cmath>
#include <set>

#include "doctest.h"
#include "fflab/ff/random.hpp"
#include "fflab/kakeya/kakeya.hpp"

using namespace fflab;

namespace {

std::vector<std::uint64_t> line_points(const PrimeField& F, const FFVector& b, const FFVector& eta) {
    std::vector<std::uint64_t> out;
    for (const auto& x : AffineLine{b, eta}.points(F)) out.push_back(encode(x, F.p()));
    return out;
}

// Direction v is covered when some full line a + s v lies in the set.
bool covers_direction(const PrimeField& F, const std::vector<char>& member, int m, const FFVector& v) {
    for (const auto& a : enumerate_points(F, m)) {
        bool all = true;
        for (int s = 0; s < F.p() && all; ++s) all = member[encode(F.vadd(a, F.vscale(s, v)), F.p())];
        if (all) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("affine lines") {
    PrimeField F(5);
    auto pts = AffineLine{{1, 2}, {3, 0}}.points(F);
    REQUIRE(pts.size() == 5);
    for (int t = 0; t < 5; ++t) CHECK(pts[t] == FFVector{F.add(1, F.mul(3, t)), 2, t});
    CHECK(all_directions(F, 2).size() == 6);
    CHECK(all_directions(F, 3).size() == 31);
}

TEST_CASE("maximal function examples") {
    for (int p : {3, 5}) {
        PrimeField F(p);
        auto one = kakeya_maximal(FFunction::constant(F, 2, 1.0));
        for (double v : one.value) CHECK(v == doctest::Approx(double(p)));

        FFunction ind(F, 3);
        FFVector eta0{1, 2};
        for (auto i : line_points(F, {0, 0}, eta0)) ind[i] = 1.0;
        auto r = kakeya_maximal(ind);
        for (std::uint64_t e = 0; e < r.value.size(); ++e)
            CHECK(r.value[e] == doctest::Approx(e == encode(eta0, p) ? double(p) : 1.0));
    }
}

TEST_CASE("maximal function matches a direct search and scales") {
    PrimeField F(5);
    Rng rng(60);
    for (int t = 0; t < 10; ++t) {
        FFunction f(F, 2);
        for (auto& v : f.data()) v = rng.complex_unit_box();
        auto r = kakeya_maximal(f);
        for (int eta = 0; eta < 5; ++eta) {
            double best = 0;
            for (int b = 0; b < 5; ++b) {
                double s = 0;
                for (auto i : line_points(F, {b}, {eta})) s += std::abs(f[i]);
                best = std::max(best, s);
            }
            CHECK(r.value[eta] == doctest::Approx(best));
        }
        cd c(-2.0, 1.5);
        FFunction g(F, 2);
        for (std::uint64_t i = 0; i < f.size(); ++i) g[i] = c * f[i];
        auto rg = kakeya_maximal(g);
        for (std::size_t e = 0; e < rg.value.size(); ++e)
            CHECK(rg.value[e] == doctest::Approx(std::abs(c) * r.value[e]).epsilon(1e-12));
    }
    CHECK(eot_ratio(FFunction::constant(F, 2, 1.0)) == doctest::Approx(std::pow(5.0, 1.0 - 2.0 / 2.0) * 1.0));
}

TEST_CASE("dual Kakeya operator") {
    PrimeField F(5);
    std::vector<FFVector> x0(5, FFVector{0});
    std::vector<cd> h(5, 0.0);
    h[2] = 1.0;
    auto D = dual_kakeya_apply(h, x0, F, 2);
    std::set<std::uint64_t> on;
    for (auto i : line_points(F, {0}, {2})) on.insert(i);
    for (std::uint64_t i = 0; i < D.size(); ++i) CHECK(std::abs(D[i] - (on.count(i) ? 0.2 : 0.0)) < 1e-12);

    std::vector<cd> ones(5, 1.0);
    auto D1 = dual_kakeya_apply(ones, x0, F, 2);
    for (const auto& x : enumerate_points(F, 2)) {
        int dirs = 0;
        for (int v = 0; v < 5; ++v) dirs += F.mul(v, x[1]) == x[0];
        CHECK(std::abs(D1.at(x) - double(dirs) / 5.0) < 1e-12);
    }

    Rng rng(61);
    std::vector<FFVector> xr;
    for (int i = 0; i < 5; ++i) xr.push_back(rng.vec(5, 1));
    auto A = line_sum_op(F, 2, xr);
    for (int t = 0; t < 10; ++t) {
        std::vector<cd> f(25), g(5);
        for (auto& v : f) v = rng.complex_unit_box();
        for (auto& v : g) v = rng.complex_unit_box();
        auto Af = A.apply(f), Ag = A.adjoint(g);
        cd lhs = 0, rhs = 0;
        for (std::size_t i = 0; i < g.size(); ++i) lhs += A.w_out * Af[i] * std::conj(g[i]);
        for (std::size_t i = 0; i < f.size(); ++i) rhs += A.w_in * f[i] * std::conj(Ag[i]);
        CHECK(std::abs(lhs - rhs) < 1e-9);
    }
}

TEST_CASE("maximal and dual norms agree") {
    for (int p : {3, 5}) {
        auto r = kakeya_duality(PrimeField(p), 2, 3.0, 7);
        CHECK(r.gap < 1e-6);
        CHECK(r.maximal_ratio > 0);
        MESSAGE("p=" << p << " maximal ratio " << r.maximal_ratio << " dual ratio " << r.dual_ratio);
    }
}

TEST_CASE("restriction to Kakeya embedding") {
    PrimeField F3(3);
    auto H3 = Surface::hyperbolic(F3, 3);
    std::vector<double> h1(3, 1.0);
    std::vector<FFVector> b0(3, FFVector{0});
    auto E = embed_closed_form(h1, b0, H3);
    auto f = restriction_to_kakeya_embed(h1, b0, H3);
    CHECK(max_abs_diff(E.data(), extension(f).data()) < 1e-9);
    // at (x1, t) = (0, 0) every line through the origin contributes: p^{-1} sum_theta e(theta x2)
    CHECK(std::abs(E.at({0, 0, 0}) - 1.0) < 1e-12);
    CHECK(std::abs(E.at({0, 1, 0})) < 1e-12);
    CHECK(std::abs(E.at({0, 2, 0})) < 1e-12);

    PrimeField F5(5);
    auto H5 = Surface::hyperbolic(F5, 3);
    Rng rng(62);
    for (int t = 0; t < 20; ++t) {
        std::vector<double> h(5);
        std::vector<FFVector> b(5);
        for (auto& v : h) v = rng.coin(0.25) ? 0.0 : rng.uniform(0, 2);
        for (auto& v : b) v = rng.vec(5, 1);
        auto g = restriction_to_kakeya_embed(h, b, H5);
        CHECK(max_abs_diff(embed_closed_form(h, b, H5).data(), extension(g).data()) < 1e-9);
        auto chk = restriction_to_kakeya_check(h, b, H5, 1.5, 3.0);
        CHECK(chk.closed_form_dev < 1e-9);
        CHECK(chk.collapse_dev < 1e-9);
        CHECK(chk.chain_ok);
    }
}

TEST_CASE("extension over complementary isotropic coordinates") {
    PrimeField F(5);
    auto P = Surface::paraboloid(F, 3);
    Subspace W(F, 2, {{1, 2}}), V(F, 2, {{1, 3}});
    CHECK(F.dot({1, 2}, {1, 2}) == 0);
    CHECK(F.dot({1, 3}, {1, 3}) == 0);
    Rng rng(63);
    for (int t = 0; t < 10; ++t) {
        SurfaceFunction f(P);
        for (auto& v : f.values()) v = rng.complex_unit_box();
        CHECK(max_abs_diff(coset_extension(f, W, V).data(), extension(f).data()) < 1e-9);
    }
    SurfaceFunction d(P);
    d[7] = 1.0;
    auto Ed = coset_extension(d, W, V);
    for (const auto& v : Ed.data()) CHECK(std::abs(v) == doctest::Approx(1.0 / 25.0));

    auto H = Surface::hyperbolic(F, 3);
    SurfaceFunction g(H);
    for (auto& v : g.values()) v = rng.complex_unit_box();
    Subspace X1(F, 2, {{1, 0}}), X2(F, 2, {{0, 1}});
    CHECK(max_abs_diff(coset_extension(g, X1, X2).data(), extension(g).data()) < 1e-9);
    CHECK_THROWS_AS(coset_extension(d, Subspace(F, 2, {{1, 0}}), V), NotIsotropicPair);

    auto [a, b] = split_complementary(W, V, {3, 4});
    CHECK(W.contains(a));
    CHECK(V.contains(b));
    CHECK(F.vadd(a, b) == FFVector{3, 4});
}

TEST_CASE("Kakeya set audit") {
    PrimeField F(3);
    KakeyaInstance full{2, std::vector<char>(9, 1), {}};
    auto a = kakeya_set_audit(F, full);
    CHECK(a.is_kakeya);
    CHECK(a.density == 1.0);

    Rng rng(64);
    auto dirs = all_directions(F, 2);
    for (int t = 0; t < 100; ++t) {
        KakeyaInstance K{2, std::vector<char>(9, 0), {}};
        for (auto& c : K.member) c = rng.coin(0.5);
        auto r = kakeya_set_audit(F, K);
        int missing = 0;
        for (const auto& v : dirs) missing += !covers_direction(F, K.member, 2, v);
        CHECK(r.missing_directions == missing);
        CHECK(r.is_kakeya == (missing == 0));
    }
    for (int p : {3, 5, 7})
        for (int m : {2, 3})
            for (auto c : {KakeyaConstruction::full, KakeyaConstruction::quadratic, KakeyaConstruction::random,
                           KakeyaConstruction::local_search}) {
                auto K = build_kakeya(PrimeField(p), m, c, 3);
                auto r = kakeya_set_audit(PrimeField(p), K);
                CHECK(r.is_kakeya);
                for (const auto& [v, base] : K.witness) CHECK(covers_direction(PrimeField(p), K.member, m, v));
            }
}

TEST_CASE("smallest planar Kakeya sets over F_3") {
    PrimeField F(3);
    auto dirs = all_directions(F, 2);
    REQUIRE(dirs.size() == 4);
    // one of the three parallel lines for each direction: 81 choices
    std::vector<std::vector<std::uint64_t>> choices;
    for (const auto& v : dirs) {
        std::set<std::vector<std::uint64_t>> lines;
        for (const auto& a : enumerate_points(F, 2)) {
            std::vector<std::uint64_t> l;
            for (int s = 0; s < 3; ++s) l.push_back(encode(F.vadd(a, F.vscale(s, v)), 3));
            std::sort(l.begin(), l.end());
            lines.insert(l);
        }
        REQUIRE(lines.size() == 3);
        for (const auto& l : lines) choices.push_back(l);
    }
    std::size_t best = 9;
    for (int code = 0; code < 81; ++code) {
        std::set<std::uint64_t> u;
        for (int k = 0, c = code; k < 4; ++k, c /= 3)
            for (auto i : choices[3 * k + c % 3]) u.insert(i);
        best = std::min(best, u.size());
    }
    CHECK(best == 7);
    CHECK(exhaustive_min_kakeya_density(F, 2) == doctest::Approx(7.0 / 9.0));
}
