#include <cmath>
#include <set>

#include "doctest.h"
#include "fflab/ff/random.hpp"
#include "fflab/fourier/transform.hpp"
#include "fflab/surfaces/surface.hpp"

using namespace fflab;

namespace {

SurfaceFunction random_sf(Rng& rng, const SurfacePtr& S) {
    SurfaceFunction g(S);
    for (auto& v : g.values()) v = rng.complex_unit_box();
    return g;
}

FFunction random_function(Rng& rng, const PrimeField& F, int d) {
    FFunction f(F, d);
    for (auto& v : f.data()) v = rng.complex_unit_box();
    return f;
}

// (g dsigma)^vee by its definition, summed here.
FFunction brute_extension(const SurfaceFunction& g) {
    const auto& S = g.surface();
    const auto& F = S.field();
    auto xs = enumerate_points(F, S.dim());
    FFunction out(F, S.dim());
    for (std::size_t k = 0; k < xs.size(); ++k) {
        cd s = 0;
        for (std::uint64_t i = 0; i < S.size(); ++i) s += g[i] * char_eval(F, F.dot(xs[k], S.point(i)));
        out[k] = s / double(S.size());
    }
    return out;
}

}  // namespace

TEST_CASE("surface points") {
    for (int p : {3, 5}) {
        PrimeField F(p);
        for (auto S : {Surface::paraboloid(F, 3), Surface::hyperbolic(F, 3), Surface::paraboloid(F, 5)}) {
            CHECK(S->size() == checked_size(p, S->dim() - 1));
            std::set<FFVector> proj;
            for (std::uint64_t i = 0; i < S->size(); ++i) {
                auto x = S->point(i);
                CHECK(S->contains(x));
                proj.insert(FFVector(x.begin(), x.end() - 1));
            }
            CHECK(proj.size() == S->size());
        }
    }
    PrimeField F5(5);
    auto H = Surface::hyperbolic(F5, 3);
    CHECK(H->qval(encode({2, 3}, 5)) == 1);
    CHECK_FALSE(H->contains({2, 3, 2}));
}

TEST_CASE("extension matches its definition") {
    Rng rng(2);
    for (int p : {3, 5}) {
        PrimeField F(p);
        for (auto S : {Surface::paraboloid(F, 3), Surface::hyperbolic(F, 3)}) {
            auto g = random_sf(rng, S);
            auto ref = brute_extension(g);
            CHECK(max_abs_diff(extension(g).data(), ref.data()) < 1e-9);
            CHECK(max_abs_diff(extension_direct(g).data(), ref.data()) < 1e-9);
        }
    }
}

TEST_CASE("extension examples") {
    PrimeField F5(5);
    auto P = Surface::paraboloid(F5, 3);
    SurfaceFunction one(P, std::vector<cd>(P->size(), 1.0));
    auto e = extension(one);
    for (int t = 1; t < 5; ++t)
        for (int x1 = 0; x1 < 5; ++x1)
            for (int x2 = 0; x2 < 5; ++x2) CHECK(std::abs(e.at({x1, x2, t})) == doctest::Approx(0.2));

    SurfaceFunction d(P);
    std::uint64_t i0 = encode({2, 1}, 5);
    d[i0] = 1.0;
    auto ed = extension(d);
    auto pt = P->point(i0);
    auto xs = enumerate_points(F5, 3);
    for (std::size_t k = 0; k < xs.size(); ++k)
        CHECK(std::abs(ed[k] - char_eval(F5, F5.dot(xs[k], pt)) / 25.0) < 1e-12);
}

TEST_CASE("restriction duality and examples") {
    PrimeField F(5);
    auto H = Surface::hyperbolic(F, 3);
    Rng rng(8);
    for (int t = 0; t < 100; ++t) {
        auto g = random_sf(rng, H);
        auto G = random_function(rng, F, 3);
        cd lhs = inner(extension(g), G, Measure::counting);
        cd rhs = surface_inner(g, restriction(G, H));
        CHECK(std::abs(lhs - rhs) < 1e-9 * (1 + std::abs(lhs)));
    }
    auto r0 = restriction(FFunction::delta(F, 3, {0, 0, 0}), H);
    for (const auto& v : r0.values()) CHECK(std::abs(v - cd(1, 0)) < 1e-12);

    std::uint64_t j = encode({3, 4}, 5);
    auto eta = H->point(j);
    FFunction plane(F, 3);
    auto xs = enumerate_points(F, 3);
    for (std::size_t k = 0; k < xs.size(); ++k) plane[k] = char_eval(F, F.dot(xs[k], eta));
    auto r = restriction(plane, H);
    for (std::uint64_t i = 0; i < r.size(); ++i) CHECK(std::abs(r[i] - (i == j ? 125.0 : 0.0)) < 1e-9);
}

TEST_CASE("closed forms of the surface measure transform") {
    PrimeField F5(5);
    auto H = Surface::hyperbolic(F5, 3);
    auto c = surface_measure_closed_form(*H);
    // -x1 x2 / t at (1, 2, 3) is -2 * 2 = 1 mod 5
    CHECK(std::abs(c.at({1, 2, 3}) - char_eval(F5, 1) / 5.0) < 1e-12);
    CHECK(std::abs(c.at({0, 0, 0}) - cd(1, 0)) < 1e-12);
    CHECK(std::abs(c.at({1, 2, 0})) < 1e-12);
    for (int p : {3, 5})
        for (int d : {3, 5}) {
            PrimeField F(p);
            for (auto S : {Surface::paraboloid(F, d), Surface::hyperbolic(F, d)}) {
                auto closed = surface_measure_closed_form(*S);
                SurfaceFunction one(S, std::vector<cd>(S->size(), 1.0));
                CHECK(max_abs_diff(closed.data(), surface_measure_direct(*S).data()) < 1e-9);
                CHECK(max_abs_diff(closed.data(), extension(one).data()) < 1e-9);
                double bound = std::pow(double(p), -(d - 1) / 2.0), worst = 0;
                for (std::uint64_t i = 1; i < closed.size(); ++i) worst = std::max(worst, std::abs(closed[i]));
                CHECK(worst <= bound + 1e-9);
            }
        }
}

TEST_CASE("Gauss sums") {
    for (int p : {3, 5, 7, 11, 13}) {
        PrimeField F(p);
        for (int t = 1; t < p; ++t) {
            cd direct = 0;
            for (int x = 0; x < p; ++x) direct += char_eval(F, F.mul(t, F.mul(x, x)));
            CHECK(std::abs(gauss_sum(F, t) - direct) < 1e-9);
            CHECK(std::abs(gauss_sum_closed(F, t) - direct) < 1e-9);
            CHECK(std::abs(direct) == doctest::Approx(std::sqrt(double(p))));
        }
    }
}

TEST_CASE("convolution and Bochner-Riesz") {
    PrimeField F(5);
    Rng rng(19);
    auto f = random_function(rng, F, 3), g = random_function(rng, F, 3);
    CHECK(max_abs_diff(convolve_direct(f, g).data(), convolve_fourier(f, g).data()) < 1e-9);

    auto H = Surface::hyperbolic(F, 3);
    auto delta = FFunction::delta(F, 3, {0, 0, 0});
    auto kernel = surface_measure_closed_form(*H);
    CHECK(max_abs_diff(bochner_riesz(delta, *H, BRVariant::kernel_only).data(), kernel.data()) < 1e-9);
    auto k2 = kernel;
    k2[0] -= 1.0;
    CHECK(max_abs_diff(bochner_riesz(delta, *H, BRVariant::with_delta).data(), k2.data()) < 1e-9);
    for (auto v : {BRVariant::kernel_only, BRVariant::with_delta})
        CHECK(max_abs_diff(bochner_riesz(f, *H, v, ConvMethod::direct).data(),
                           bochner_riesz(f, *H, v, ConvMethod::fourier).data()) < 1e-9);
}

TEST_CASE("line identity for the Bochner-Riesz kernel") {
    PrimeField F(5);
    auto H = Surface::hyperbolic(F, 3);
    for (int m = 0; m < 5; ++m)
        for (int x2 = 0; x2 < 5; ++x2)
            for (int t = 0; t < 5; ++t) CHECK(brolines_deviation(*H, m, x2, t) < 1e-9);
}

TEST_CASE("tube geometry") {
    PrimeField F(5);
    for (int m = 0; m < 5; ++m) {
        auto J = tube_function(F, m, 2, 3);
        int count = 0;
        for (const auto& v : J.data()) count += std::abs(v) > 0.5;
        CHECK(count == 25);
    }
    // tubes through a common (x2, t) point have distinct directions
    auto pts = enumerate_points(F, 2);
    for (const auto& base : pts) {
        std::vector<int> through(25, 0);
        for (int m = 0; m < 5; ++m) {
            auto J = tube_function(F, m, base[0], base[1]);
            for (const auto& q : pts)
                if (q != base && std::abs(J.at({0, q[0], q[1]})) > 0.5) ++through[encode(q, 5)];
        }
        for (int c : through) CHECK(c <= 1);
    }
}

TEST_CASE("pseudo-conformal slicing") {
    PrimeField F(5);
    Rng rng(20);
    for (auto S : {Surface::hyperbolic(F, 3), Surface::paraboloid(F, 3)}) {
        CHECK(pseudo_conformal_check(FFunction::delta(F, 2, {1, 3}), *S) < 1e-9);
        CHECK(pseudo_conformal_check(FFunction(F, 2), *S) < 1e-12);
        for (int t = 0; t < 10; ++t) CHECK(pseudo_conformal_check(random_function(rng, F, 2), *S) < 1e-9);
    }
}

TEST_CASE("functions carried by a plane") {
    PrimeField F(5);
    Rng rng(21);
    for (int t = 0; t < 20; ++t) {
        auto f = random_function(rng, F, 2);
        CHECK(plane_embed_ft_check(f, 2, 1) < 1e-9);
        CHECK(plane_embed_ft_check(f, rng.below(5), rng.below(5)) < 1e-9);
    }
    auto f = random_function(rng, F, 2);
    auto G = fourier_transform(plane_embed(f, 0, 0));
    auto fh = fourier_transform(f);
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            for (int c = 0; c < 5; ++c) CHECK(std::abs(G.at({a, b, c}) - fh.at({a, c})) < 1e-9);
    auto D = fourier_transform(plane_embed(FFunction::delta(F, 2, {2, 4}), 3, 1));
    for (const auto& v : D.data()) CHECK(std::abs(v) == doctest::Approx(1.0));
}

TEST_CASE("equivalent surfaces carry equal extension norms") {
    PrimeField F5(5);
    auto P = Surface::paraboloid(F5, 3);
    auto H = Surface::hyperbolic(F5, 3);
    Rng rng(22);
    auto g = random_sf(rng, P);
    auto same = equivalence_transfer(g, Mat::identity(2), P);
    CHECK(max_abs_diff(same.values(), g.values()) == 0.0);

    // -1 is a square mod 5, so x.x is congruent to x1 x2; find M by search
    std::optional<Mat> M;
    for (int code = 0; code < 625 && !M; ++code) {
        Mat C(2, 2);
        for (int i = 0, c = code; i < 4; ++i, c /= 5) C.a[i] = c % 5;
        if (mul(F5, mul(F5, transpose(C), H->form().matrix()), C) == P->form().matrix()) M = C;
    }
    REQUIRE(M);
    for (int t = 0; t < 50; ++t) {
        auto f = random_sf(rng, P);
        auto h = equivalence_transfer(f, *M, H);
        for (double q : {1.5, 2.0, 4.0})
            CHECK(std::abs(lp_norm(extension(f), q, Measure::counting) - lp_norm(extension(h), q, Measure::counting)) <
                  1e-9);
        CHECK(std::abs(surface_norm(f, 3.0) - surface_norm(h, 3.0)) < 1e-12);
    }
    CHECK_THROWS_AS(equivalence_transfer(g, Mat::identity(2), H), NotCongruent);

    PrimeField F7(7);
    auto A = QuadraticSpace::diagonal(F7, {1, 3});
    Mat D = Mat::diagonal({2, 5});
    QuadraticSpace B(F7, mul(F7, mul(F7, transpose(D), A.matrix()), D));
    // B = D^T A D, so A = M^T B M with M = D^{-1}
    auto Dinv = *inverse(F7, D);
    auto SA = Surface::general(A), SB = Surface::general(B);
    for (int t = 0; t < 10; ++t) {
        auto f = random_sf(rng, SA);
        auto h = equivalence_transfer(f, Dinv, SB);
        CHECK(std::abs(lp_norm(extension(f), 4.0, Measure::counting) - lp_norm(extension(h), 4.0, Measure::counting)) <
              1e-9);
    }
}
