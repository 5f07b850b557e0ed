#include <cmath>
#include <numbers>

#include "doctest.h"
#include "fflab/ff/ffunction.hpp"
#include "fflab/ff/parallel.hpp"
#include "fflab/ff/random.hpp"

using namespace fflab;

TEST_CASE("prime field tables") {
    for (int p : {3, 5, 7, 11, 13}) {
        PrimeField F(p);
        std::vector<bool> sq(p, false);
        for (int x = 0; x < p; ++x) sq[x * x % p] = true;
        for (int x = 0; x < p; ++x) {
            CHECK(F.is_square(x) == sq[x]);
            if (x) CHECK(F.mul(F.inv(x), x) == 1);
        }
        CHECK(F.mul(F.half(), 2) == 1);
    }
    CHECK_THROWS_AS(PrimeField(2), ConfigError);
    CHECK_THROWS_AS(PrimeField(9), ConfigError);
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(15));
}

TEST_CASE("dot product is symmetric and bilinear") {
    PrimeField F(7);
    Rng rng(3);
    for (int t = 0; t < 50; ++t) {
        auto a = rng.vec(7, 4), b = rng.vec(7, 4), c = rng.vec(7, 4);
        int k = rng.below(7);
        CHECK(F.dot(a, b) == F.dot(b, a));
        CHECK(F.dot(F.vadd(a, F.vscale(k, c)), b) == F.add(F.dot(a, b), F.mul(k, F.dot(c, b))));
    }
}

TEST_CASE("character values") {
    PrimeField F5(5);
    CHECK(std::abs(char_eval(F5, 0) - cd(1, 0)) < 1e-15);
    CHECK(std::abs(char_eval(F5, 1) * char_eval(F5, 4) - cd(1, 0)) < 1e-12);
    PrimeField F3(3);
    cd s = 0;
    for (int x = 0; x < 3; ++x) s += char_eval(F3, x);
    CHECK(std::abs(s) < 1e-12);
    for (int p : {3, 5, 7, 11, 13}) {
        CharacterTable chi(p);
        CHECK(std::abs(chi(0) - cd(1, 0)) < 1e-15);
        cd sum = 0;
        for (int k = 0; k < p; ++k) {
            CHECK(std::abs(std::abs(chi(k)) - 1.0) < 1e-12);
            CHECK(std::abs(chi(k) - std::polar(1.0, 2 * std::numbers::pi * k / p)) < 1e-12);
            sum += chi(k);
        }
        CHECK(std::abs(sum) < 1e-9);
        CHECK(std::abs(chi.at(-1) - chi(p - 1)) < 1e-15);
    }
}

TEST_CASE("character orthogonality in F_p^d") {
    for (auto [p, d] : {std::pair{3, 3}, {5, 2}, {7, 2}}) {
        PrimeField F(p);
        auto pts = enumerate_points(F, d);
        for (std::size_t k = 1; k < pts.size(); ++k) {
            cd s = 0;
            for (const auto& x : pts) s += char_eval(F, F.dot(x, pts[k]));
            CHECK(std::abs(s) < 1e-9 * double(pts.size()));
        }
    }
}

TEST_CASE("point enumeration and encoding") {
    PrimeField F3(3);
    auto one = enumerate_points(F3, 1);
    REQUIRE(one.size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(one[i] == FFVector{i});
    auto two = enumerate_points(F3, 2);
    REQUIRE(two.size() == 9);
    CHECK(two.front() == FFVector{0, 0});
    CHECK(two.back() == FFVector{2, 2});
    CHECK(two[1] == FFVector{1, 0});  // coordinate 0 is the fastest digit
    CHECK_THROWS_AS(enumerate_points(PrimeField(13), 9), SizeOverflow);
    CHECK_THROWS_AS(checked_size(13, 9), SizeOverflow);
    for (int p : {3, 5, 7})
        for (int d = 1; d <= 3; ++d) {
            auto pts = enumerate_points(PrimeField(p), d);
            for (std::uint64_t i = 0; i < pts.size(); ++i) {
                CHECK(encode(pts[i], p) == i);
                CHECK(decode(i, p, d) == pts[i]);
            }
        }
}

TEST_CASE("lp norms") {
    PrimeField F(3);
    auto delta = FFunction::delta(F, 2, {1, 2});
    CHECK(lp_norm(delta, 2.0, Measure::counting) == doctest::Approx(1.0));
    auto one = FFunction::constant(F, 2, 1.0);
    CHECK(lp_norm(one, 2.0, Measure::counting) == doctest::Approx(3.0));
    for (double q : {1.0, 1.5, 2.0, 4.0, kInf}) CHECK(lp_norm(one, q, Measure::normalized) == doctest::Approx(1.0));
    FFunction f(F, 2);
    f[4] = cd(3, 4);
    f[0] = 1.0;
    CHECK(lp_norm(f, kInf, Measure::counting) == doctest::Approx(5.0));
    CHECK(lp_norm(f, 1.0, Measure::counting) == doctest::Approx(6.0));
    CHECK_THROWS_AS(lp_norm(f, 0.5, Measure::counting), ConfigError);
}

TEST_CASE("Hoelder inequality on random functions") {
    PrimeField F(5);
    Rng rng(11);
    for (int t = 0; t < 50; ++t) {
        FFunction f(F, 2), g(F, 2);
        for (std::uint64_t i = 0; i < f.size(); ++i) {
            f[i] = rng.complex_unit_box();
            g[i] = rng.complex_unit_box();
        }
        double q = rng.uniform(1.05, 6.0), qc = q / (q - 1.0);
        for (auto m : {Measure::counting, Measure::normalized})
            CHECK(std::abs(inner(f, g, m)) <= lp_norm(f, q, m) * lp_norm(g, qc, m) + 1e-9);
    }
}

TEST_CASE("seed fan-out") {
    CHECK(derive_seed(1, "FT-1", 0) == derive_seed(1, "FT-1", 0));
    CHECK(derive_seed(1, "FT-1", 0) != derive_seed(1, "FT-1", 1));
    CHECK(derive_seed(1, "FT-1", 0) != derive_seed(2, "FT-1", 0));
    CHECK(derive_seed(1, "FT-1", 0) != derive_seed(1, "FT-2", 0));
    Rng a(42), b(42);
    for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
    auto s = Rng(5).sample(10, 4);
    CHECK(s.size() == 4);
    for (auto x : s) CHECK(x < 10);
}

TEST_CASE("parallel_for covers every index once for any worker count") {
    int saved = worker_count();
    for (int w : {1, 2, 3, 8}) {
        set_worker_count(w);
        std::vector<int> hits(1000, 0);
        parallel_for(hits.size(), [&](std::uint64_t i) { hits[i] += 1; });
        for (int h : hits) CHECK(h == 1);
    }
    set_worker_count(saved);
}
