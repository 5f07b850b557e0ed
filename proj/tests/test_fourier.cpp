#include <cmath>

#include "doctest.h"
#include "fflab/ff/random.hpp"
#include "fflab/fourier/exponents.hpp"
#include "fflab/fourier/opnorm.hpp"
#include "fflab/fourier/transform.hpp"

using namespace fflab;

namespace {

FFunction random_function(Rng& rng, const PrimeField& F, int d) {
    FFunction f(F, d);
    for (auto& v : f.data()) v = rng.complex_unit_box();
    return f;
}

// Transform by the defining double sum, written out independently of the library.
FFunction brute_transform(const FFunction& f, int sign) {
    const auto& F = f.field();
    auto pts = enumerate_points(F, f.dim());
    FFunction out(F, f.dim());
    for (std::size_t k = 0; k < pts.size(); ++k) {
        cd s = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) s += f[i] * char_eval(F, F.reduce(sign * F.dot(pts[i], pts[k])));
        out[k] = s;
    }
    return out;
}

}  // namespace

TEST_CASE("transform examples") {
    PrimeField F3(3);
    auto hat = fourier_transform(FFunction::delta(F3, 2, {0, 0}));
    for (const auto& v : hat.data()) CHECK(std::abs(v - cd(1, 0)) < 1e-12);
    auto one = fourier_transform(FFunction::constant(F3, 1, 1.0));
    CHECK(std::abs(one[0] - cd(3, 0)) < 1e-12);
    CHECK(std::abs(one[1]) < 1e-12);
    CHECK(std::abs(one[2]) < 1e-12);
    auto inv = inverse_transform(FFunction::constant(F3, 2, 1.0));
    CHECK(max_abs_diff(inv.data(), FFunction::delta(F3, 2, {0, 0}).data()) < 1e-12);
}

TEST_CASE("fast transforms agree with the double sum") {
    Rng rng(31);
    for (auto [p, d] : {std::pair{3, 2}, {5, 3}, {7, 2}}) {
        PrimeField F(p);
        auto f = random_function(rng, F, d);
        auto fwd = brute_transform(f, -1);
        CHECK(max_abs_diff(fourier_transform(f).data(), fwd.data()) < 1e-9);
        CHECK(max_abs_diff(fourier_transform_naive(f).data(), fwd.data()) < 1e-9);
        auto back = brute_transform(f, +1);
        for (auto& v : back.data()) v /= double(f.size());
        CHECK(max_abs_diff(inverse_transform(f).data(), back.data()) < 1e-9);
        CHECK(max_abs_diff(inverse_transform_naive(f).data(), back.data()) < 1e-9);
    }
}

TEST_CASE("Plancherel under the dual normalization") {
    PrimeField F3(3);
    for (std::uint64_t i = 0; i < 9; ++i) {
        FFunction e(F3, 2);
        e[i] = 1.0;
        CHECK(lp_norm(fourier_transform(e), 2.0, Measure::normalized) == doctest::Approx(1.0));
    }
    Rng rng(17);
    auto f5 = random_function(rng, PrimeField(5), 2);
    CHECK(lp_norm(fourier_transform(f5), 2.0, Measure::normalized) ==
          doctest::Approx(lp_norm(f5, 2.0, Measure::counting)).epsilon(1e-12));
    PrimeField F7(7);
    for (int t = 0; t < 100; ++t) {
        auto f = random_function(rng, F7, 3);
        double a = lp_norm(fourier_transform(f), 2.0, Measure::normalized), b = lp_norm(f, 2.0, Measure::counting);
        CHECK(std::abs(a - b) <= 1e-9 * b);
    }
}

TEST_CASE("inversion and linearity") {
    PrimeField F(5);
    Rng rng(3);
    for (int t = 0; t < 100; ++t) {
        auto f = random_function(rng, F, 3);
        CHECK(max_abs_diff(fourier_transform(inverse_transform(f)).data(), f.data()) < 1e-9);
        CHECK(max_abs_diff(inverse_transform(fourier_transform(f)).data(), f.data()) < 1e-9);
    }
    auto f = random_function(rng, F, 2), g = random_function(rng, F, 2);
    cd a(2, -1), b(0.5, 3);
    FFunction h(F, 2);
    for (std::uint64_t i = 0; i < h.size(); ++i) h[i] = a * f[i] + b * g[i];
    auto lhs = inverse_transform(h);
    auto fi = inverse_transform(f), gi = inverse_transform(g);
    for (std::uint64_t i = 0; i < h.size(); ++i) CHECK(std::abs(lhs[i] - (a * fi[i] + b * gi[i])) < 1e-9);
}

TEST_CASE("mixed norms") {
    PrimeField F(5);
    Subspace V(F, 2, {{1, 2}}), W(F, 2, {{1, 3}});
    auto delta = FFunction::delta(F, 3, {2, 4, 1});
    for (auto [q, r] : {std::pair{1.5, 2.0}, {4.0, 2.0}, {2.0, 3.0}})
        CHECK(mixed_norm(delta, {V, W, q, r, true}, Measure::counting) == doctest::Approx(1.0));

    auto one = FFunction::constant(F, 3, 1.0);
    double q = 3.0, r = 2.0;
    double expect = std::pow(5.0 * 5.0, 1.0 / q) * std::pow(5.0, 1.0 / r);
    CHECK(mixed_norm(one, {V, W, q, r, true}, Measure::counting) == doctest::Approx(expect));
    CHECK(mixed_norm(one, {V, W, q, r, true}, Measure::normalized) == doctest::Approx(1.0));

    Rng rng(6);
    for (int t = 0; t < 50; ++t) {
        auto f = random_function(rng, F, 3);
        CHECK(mixed_norm(f, {V, W, 2.0, 2.0, true}, Measure::counting) ==
              doctest::Approx(lp_norm(f, 2.0, Measure::counting)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(mixed_norm(one, {V, V, 2.0, 2.0, true}, Measure::counting), NonComplementary);
}

TEST_CASE("reverse Minkowski for powers below one") {
    Rng rng(10);
    for (int t = 0; t < 200; ++t) {
        double r = rng.uniform(0.05, 0.95), sum = 0, sum_pow = 0;
        int n = 1 + rng.below(8);
        for (int i = 0; i < n; ++i) {
            double a = rng.uniform(0, 5);
            sum += a;
            sum_pow += std::pow(a, r);
        }
        CHECK(std::pow(sum, r) <= sum_pow + 1e-12);
    }
}

TEST_CASE("exponent transfer") {
    CHECK(stein_tomas_transfer(0.5, 0.5, 2.0) == doctest::Approx(0.0));
    CHECK(stein_tomas_exponent(3) == doctest::Approx(4.0));
    CHECK(stein_tomas_exponent(5) == doctest::Approx(3.0));
    CHECK(conjectured_exponent(3) == doctest::Approx(3.0));
    CHECK(conjectured_exponent(5) == doctest::Approx(2.5));
    CHECK(stein_tomas_transfer(0.7, 1.0, 2.0) == doctest::Approx(0.7));
    CHECK(stein_tomas_transfer(0.7, 1.0 - 1e-9, 2.0) == doctest::Approx(0.7).epsilon(1e-6));
    for (double th : {0.1, 0.5, 0.9}) CHECK(stein_tomas_transfer(0.0, th, 3.0) == 0.0);
}

TEST_CASE("L2 extension constant") {
    auto P = Surface::paraboloid(PrimeField(3), 3);
    CHECK(exact_r22(*P) == doctest::Approx(std::sqrt(3.0)));
    auto H = Surface::hyperbolic(PrimeField(5), 3);
    auto pw = power_iteration_r22(H, 500, 1e-14, 4);
    CHECK(std::abs(pw.value - exact_r22(*H)) <= 1e-6 * exact_r22(*H));
    for (int p : {3, 5}) {
        auto S = Surface::paraboloid(PrimeField(p), 3);
        CHECK(std::abs(power_iteration_r22(S, 500, 1e-14, 1).value - exact_r22(*S)) <= 1e-6 * exact_r22(*S));
    }
}

TEST_CASE("extension ratio lower bounds never exceed the L2 constant at (2,2)") {
    auto S = Surface::paraboloid(PrimeField(3), 3);
    auto lb = r_star_lower_bound(S, 2.0, 2.0, 3, 50, 1);
    CHECK(lb.value <= exact_r22(*S) + 1e-9);
    CHECK(lb.value >= 0.99 * exact_r22(*S));
    CHECK_FALSE(lb.source.empty());
}
