#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "qcap/partitions.hpp"
#include "qcap/theta.hpp"
#include "test_util.hpp"

using namespace qcap;
using qcap::testutil::series_of;

TEST_CASE("theta bilateral sum, lowest terms") {
    // theta(tq^4; q^6) = sum_k t^k q^(3k^2+k)
    QSeries th = theta_sum(ThetaSpec{Monomial{1, 1, 4}, 6}, 15);
    CHECK(agree(th, series_of(0, 15, {{0, 0, 1}, {2, -1, 1}, {4, 1, 1}, {10, -2, 1}, {14, 2, 1}})));

    // theta(-t^2q^2; q^6) = sum_k (-1)^k t^(2k) q^(3k^2-k)
    QSeries th2 = theta_sum(ThetaSpec{Monomial{-1, 2, 2}, 6}, 15);
    CHECK(agree(th2,
                series_of(0, 15, {{0, 0, 1}, {2, 2, -1}, {4, -2, -1}, {10, 4, 1}, {14, -4, 1}})));

    // only k = 0 fits an order-1 window
    CHECK(agree(theta_sum(ThetaSpec{Monomial{1, 1, 4}, 6}, 1), QSeries::one(1)));
}

TEST_CASE("theta sum argument must be a unit monomial") {
    CHECK_THROWS_AS(theta_sum(ThetaSpec{Monomial{2, 0, 1}, 2}, 10), std::invalid_argument);
    CHECK_THROWS_AS(theta_sum(ThetaSpec{Monomial{1, 0, 1}, 0}, 10), std::invalid_argument);
}

TEST_CASE("jacobi triple product at the fixed arguments") {
    for (const ThetaSpec& spec :
         {ThetaSpec{Monomial{1, 1, 4}, 6}, ThetaSpec{Monomial{-1, 2, 2}, 6},
          ThetaSpec{Monomial{1, 1, 1}, 6}, ThetaSpec{Monomial{1, 0, 1}, 2}}) {
        CHECK(agree(theta_sum(spec, 60), theta_product(spec, 60)));
    }
}

TEST_CASE("jacobi triple product at random unit arguments") {
    std::mt19937 rng(2024);
    for (int i = 0; i < 8; ++i) {
        int modulus = 1 + static_cast<int>(rng() % 6);
        int q_exp = 1 + static_cast<int>(rng() % static_cast<unsigned>(modulus));
        int t_exp = static_cast<int>(rng() % 5) - 2;
        ThetaSpec spec{Monomial{rng() % 2 ? 1 : -1, t_exp, q_exp}, modulus};
        CHECK(agree(theta_sum(spec, 60), theta_product(spec, 60)));
    }
}

TEST_CASE("chi3") {
    CHECK(chi3(0) == 1);
    CHECK(chi3(1) == -1);
    CHECK(chi3(2) == 0);
    for (long long m = -9; m <= 9; ++m) CHECK(chi3(m) == chi3(m + 3));
}

TEST_CASE("false theta lowest terms and forms") {
    QSeries ft1 = false_theta(1, FalseThetaForm::character, 21);
    CHECK(agree(ft1, series_of(0, 21, {{0, 0, 1}, {2, -1, -1}, {12, -3, 1}, {20, -4, -1}})));

    QSeries ft2 = false_theta(2, FalseThetaForm::character, 17);
    CHECK(agree(ft2, series_of(0, 17, {{0, 0, 1}, {1, 1, -1}, {9, 3, 1}, {16, 4, -1}})));

    for (int which : {1, 2})
        CHECK(agree(false_theta(which, FalseThetaForm::character, 200),
                    false_theta(which, FalseThetaForm::split, 200)));
}

TEST_CASE("false theta sums are one-sided: sqrt-size support") {
    for (int which : {1, 2}) {
        QSeries split = false_theta(which, FalseThetaForm::split, 400);
        long long terms = 0;
        split.for_each_term([&](int, int, const BigInt&) { ++terms; });
        CHECK(terms >= 10); // 20 = sqrt(400); at least half of that
        CHECK(terms <= 63); // and at most ~3x
    }
}

TEST_CASE("euler expansions") {
    {
        auto [lhs, rhs] = euler_sides(1, Monomial{1, 0, 1}, 1, 60);
        CHECK(agree(lhs, rhs));
    }
    {
        auto [lhs, rhs] = euler_sides(2, Monomial{1, 1, 3}, 3, 60);
        CHECK(agree(lhs, rhs));
        CHECK(agree(lhs, pochhammer_infinite(Monomial{1, 1, 3}, 3, 60)));
    }
    {
        // x at or above the window: both sides collapse to 1
        auto [lhs, rhs] = euler_sides(1, Monomial{1, 0, 12}, 1, 10);
        CHECK(agree(lhs, QSeries::one(10)));
        CHECK(agree(rhs, QSeries::one(10)));
    }
    {
        // x = q: coefficients count all partitions
        auto [lhs, rhs] = euler_sides(1, Monomial{1, 0, 1}, 1, 12);
        for (int n = 0; n < 12; ++n) {
            long long c = 0;
            enumerate_partitions(n, std::nullopt, [&](const Partition&) { ++c; });
            CHECK(lhs.coeff(n).coeff(0) == c);
            CHECK(rhs.coeff(n).coeff(0) == c);
        }
    }
    CHECK_THROWS_AS(euler_sides(1, Monomial{1, 0, 0}, 1, 10), SeriesError);
}

TEST_CASE("cauchy even-index sides") {
    for (int modulus : {1, 3}) {
        auto sides = cauchy_even_sides(modulus, 100);
        CHECK(agree(sides.even_sum, sides.inverse_product));
        CHECK(agree(sides.even_sum, sides.neg_pochhammer));
    }
    // at base q^3 the value is (-q^3;q^3)_inf
    auto sides3 = cauchy_even_sides(3, 60);
    CHECK(agree(sides3.even_sum, pochhammer_infinite(Monomial{-1, 0, 3}, 3, 60)));
    // an order-1 window only sees the constant term
    auto tiny = cauchy_even_sides(1, 1);
    CHECK(agree(tiny.even_sum, QSeries::one(1)));
    CHECK(agree(tiny.inverse_product, QSeries::one(1)));
    CHECK(agree(tiny.neg_pochhammer, QSeries::one(1)));
}

TEST_CASE("lost-notebook transformation") {
    {
        // a = tq^4, b = t^-1 q^2, base q^6
        auto [lhs, rhs] = ramanujan_sides(Monomial{1, 1, 4}, Monomial{1, -1, 2}, 6, 40);
        CHECK(rhs.lo() < 0); // the a^-1 prefactor forces a negative window
        CHECK(agree(lhs, rhs));
    }
    {
        // a = t^-1 q^-1, b = tq, base q^6
        auto [lhs, rhs] = ramanujan_sides(Monomial{1, -1, -1}, Monomial{1, 1, 1}, 6, 40);
        CHECK(agree(lhs, rhs));
    }
    {
        // a = b = q, base q
        auto [lhs, rhs] = ramanujan_sides(Monomial{1, 0, 1}, Monomial{1, 0, 1}, 1, 40);
        CHECK(agree(lhs, rhs));
    }
    CHECK_THROWS_AS(ramanujan_sides(Monomial{2, 0, 1}, Monomial{1, 0, 1}, 1, 10), SeriesError);
    CHECK_THROWS_AS(ramanujan_sides(Monomial{1, 0, -2}, Monomial{1, 0, 1}, 1, 10), SeriesError);
}

TEST_CASE("rogers transformation") {
    {
        auto [lhs, rhs] = rogers_sides(Monomial{-1, -1, -4}, 6, 40);
        CHECK(lhs.lo() < 0); // genuinely negative q-support on both sides
        CHECK(agree(lhs, rhs));
    }
    {
        auto [lhs, rhs] = rogers_sides(Monomial{-1, 1, 1}, 6, 40);
        CHECK(agree(lhs, rhs));
    }
    {
        // y above the window: only n = 0 survives on both sides
        auto [lhs, rhs] = rogers_sides(Monomial{1, 0, 15}, 1, 10);
        CHECK(agree(lhs, QSeries::one(10)));
        CHECK(agree(rhs, QSeries::one(10)));
    }
}

TEST_CASE("substituting q -> q^6 commutes with building at base q^6") {
    // the euler expansion at base 1, pushed through q -> q^6
    auto [lhs1, rhs1] = euler_sides(2, Monomial{1, 1, 1}, 1, 10);
    auto [lhs6, rhs6] = euler_sides(2, Monomial{1, 1, 6}, 6, 60);
    CHECK(agree(lhs1.substituted_q(6), lhs6));
    CHECK(agree(rhs1.substituted_q(6), rhs6));
}

TEST_CASE("capparelli products match the count series") {
    const int order = 40;
    QSeries c2_counts = brute_force_series(kConfigC2, std::nullopt, order).at_t1();
    QSeries prod2 = QSeries::one(order);
    for (int e : {2, 3, 4, 6}) prod2 = prod2 * pochhammer_infinite(Monomial{-1, 0, e}, 6, order);
    CHECK(agree(c2_counts, prod2));

    QSeries c2s_counts = brute_force_series(kConfigC2Star, std::nullopt, order).at_t1();
    QSeries prod2s = QSeries::one(order);
    for (int e : {1, 3, 5, 6}) prod2s = prod2s * pochhammer_infinite(Monomial{-1, 0, e}, 6, order);
    CHECK(agree(c2s_counts, prod2s));
}

TEST_CASE("bilateral assembly of the alternating sum") {
    const int order = 100;
    QSeries direct(0, order);
    for (long long k = 0; 3 * k * k + k < order; ++k)
        direct = direct + QSeries::monomial(
                              Monomial{k % 2 ? -1 : 1, static_cast<int>(-2 * k),
                                       static_cast<int>(3 * k * k + k)},
                              order);
    for (long long k = -1; 3 * k * k + k < order; --k)
        direct = direct + QSeries::monomial(
                              Monomial{k % 2 ? -1 : 1, static_cast<int>(-2 * k),
                                       static_cast<int>(3 * k * k + k)},
                              order);
    CHECK(agree(direct, theta_sum(ThetaSpec{Monomial{-1, 2, 2}, 6}, order)));
}
