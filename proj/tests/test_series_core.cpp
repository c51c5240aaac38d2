#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "qcap/qseries.hpp"
#include "qcap/zpoly.hpp"
#include "test_util.hpp"

using namespace qcap;
using qcap::testutil::pentagonal_series;
using qcap::testutil::series_of;

namespace {

QSeries random_series(std::mt19937& rng, int lo, int order, bool unit_leading) {
    QSeries s(lo, order);
    for (int e = unit_leading ? lo + 1 : lo; e < order; ++e) {
        int n_terms = static_cast<int>(rng() % 3);
        for (int i = 0; i < n_terms; ++i) {
            int t = static_cast<int>(rng() % 7) - 3;
            int c = static_cast<int>(rng() % 9) - 4;
            s.add_term(e, t, c);
        }
    }
    if (unit_leading) {
        int t = static_cast<int>(rng() % 5) - 2;
        s.add_term(lo, t, rng() % 2 ? 1 : -1);
    }
    return s;
}

} // namespace

TEST_CASE("monomial algebra") {
    Monomial m{-1, 2, 3};
    CHECK(m.inverse().coeff == -1);
    CHECK(m.inverse().t_exp == -2);
    CHECK(m.inverse().q_exp == -3);
    CHECK(m.pow(3).coeff == -1);
    CHECK(m.pow(-2).q_exp == -6);
    CHECK_THROWS_AS(Monomial(2, 0, 0).inverse(), SeriesError);
    Monomial x{3, 1, 1};
    CHECK(x.pow(2).coeff == 9);
}

TEST_CASE("tlaurent basics") {
    TLaurent f = TLaurent::term(2, 1) + TLaurent::term(-2, 1);
    CHECK(f.is_zero());
    TLaurent g = TLaurent::term(1, -1) + TLaurent::constant(3);
    CHECK(g.coeff(-1) == 1);
    CHECK(g.coeff(0) == 3);
    CHECK(g.at_t1() == 4);
    CHECK((g * g).coeff(-2) == 1);
    CHECK((g * g).coeff(-1) == 6);
    CHECK(TLaurent::term(-1, 4).is_unit_monomial());
    CHECK_FALSE(TLaurent::term(2, 4).is_unit_monomial());
    CHECK_FALSE(g.is_unit_monomial());
    CHECK(g.shifted(2).coeff(1) == 1);
}

TEST_CASE("addition: cancellation, identity, C2 assembly") {
    // (1 + tq) + (1 - tq) = 2
    QSeries a = series_of(0, 10, {{0, 0, 1}, {1, 1, 1}});
    QSeries b = series_of(0, 10, {{0, 0, 1}, {1, 1, -1}});
    CHECK(agree(a + b, series_of(0, 10, {{0, 0, 2}})));

    CHECK(agree(a + QSeries(0, 10), a));

    // C_1 + beta t^-1 q^2 -> C_2 = 1 + alpha t q + beta t^-1 q^2 (alpha = beta = 1)
    QSeries c1 = series_of(0, 10, {{0, 0, 1}, {1, 1, 1}});
    QSeries c2 = c1 + QSeries::monomial(Monomial{1, -1, 2}, 10);
    CHECK(agree(c2, series_of(0, 10, {{0, 0, 1}, {1, 1, 1}, {2, -1, 1}})));
}

TEST_CASE("multiplication: difference of squares, identity, hand expansion") {
    QSeries a = series_of(0, 10, {{0, 0, 1}, {1, 1, 1}});
    QSeries b = series_of(0, 10, {{0, 0, 1}, {1, 1, -1}});
    CHECK(agree(a * b, series_of(0, 10, {{0, 0, 1}, {2, 2, -1}})));

    CHECK(agree(a * QSeries::one(10), a));

    // (1+q)(1+q^2) = 1 + q + q^2 + q^3 = (-q;q)_2
    QSeries p = series_of(0, 10, {{0, 0, 1}, {1, 0, 1}}) * series_of(0, 10, {{0, 0, 1}, {2, 0, 1}});
    QSeries expected = series_of(0, 10, {{0, 0, 1}, {1, 0, 1}, {2, 0, 1}, {3, 0, 1}});
    CHECK(agree(p, expected));
    CHECK(agree(pochhammer_finite(Monomial{-1, 0, 1}, 1, 2, 10), expected));
}

TEST_CASE("product window rule") {
    QSeries a(-2, 5); // knows [-2, 5)
    QSeries b(1, 4);  // knows [1, 4)
    QSeries p = a * b;
    CHECK(p.lo() == -1);
    CHECK(p.order() == 2); // min(-2 + 4, 1 + 5)
}

TEST_CASE("inverse: geometric series, identity, q^3 geometric") {
    QSeries one_minus_q = series_of(0, 12, {{0, 0, 1}, {1, 0, -1}});
    QSeries inv = one_minus_q.inverse();
    for (int e = 0; e < 12; ++e) CHECK(inv.coeff(e).coeff(0) == 1);

    CHECK(agree(QSeries::one(12).inverse(), QSeries::one(12)));

    QSeries g3 = pochhammer_finite(Monomial{1, 0, 3}, 3, 1, 12).inverse();
    CHECK(agree(g3, series_of(0, 12, {{0, 0, 1}, {3, 0, 1}, {6, 0, 1}, {9, 0, 1}})));
}

TEST_CASE("inverse preconditions") {
    CHECK_THROWS_AS(QSeries(0, 5).inverse(), SeriesError); // no nonzero term
    QSeries two = QSeries::constant(2, 5);
    CHECK_THROWS_AS(two.inverse(), SeriesError); // non-unit leading coefficient
    QSeries multi = series_of(0, 5, {{0, 0, 1}, {0, 1, 1}});
    CHECK_THROWS_AS(multi.inverse(), SeriesError); // two t-terms at the bottom
}

TEST_CASE("inverse of shifted leading term tracks the window") {
    // a = q^2 (1 - q) on [0, 8): inverse known on [-2, 4)
    QSeries a = series_of(0, 8, {{2, 0, 1}, {3, 0, -1}});
    QSeries inv = a.inverse();
    CHECK(inv.lo() == -2);
    CHECK(inv.order() == 4);
    QSeries prod = a * inv;
    CHECK(agree(prod, QSeries::one(prod.order())));
}

TEST_CASE("inverse round-trip on 200 random unit-leading series") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        int lo = static_cast<int>(rng() % 4) - 2;
        int order = lo + 3 + static_cast<int>(rng() % 14);
        QSeries a = random_series(rng, lo, order, true);
        QSeries prod = a * a.inverse();
        CHECK(agree(prod, QSeries::one(prod.order())));
    }
}

TEST_CASE("substitution q -> q^k") {
    QSeries s = series_of(0, 2, {{0, 0, 1}, {1, 0, 1}});
    CHECK(agree(s.substituted_q(6), series_of(0, 12, {{0, 0, 1}, {6, 0, 1}})));

    std::mt19937 rng(3);
    QSeries r = random_series(rng, 0, 9, false);
    CHECK(agree(r.substituted_q(1), r));

    QSeries u = series_of(0, 3, {{0, 0, 1}, {1, 0, -1}, {2, 0, 1}});
    CHECK(agree(u.substituted_q(3), series_of(0, 9, {{0, 0, 1}, {3, 0, -1}, {6, 0, 1}})));
}

TEST_CASE("zpoly scaling") {
    // z -> z q^3 on the polynomial z
    ZPoly z(2, 0, 10);
    z.set_coeff(1, QSeries::one(10));
    ZPoly scaled = z.scaled_z(3);
    CHECK(agree(scaled.coeff(1), QSeries::monomial(Monomial{1, 0, 3}, 10).rewindowed(0, 10)));

    // scale by q^0 is the identity
    ZPoly p(2, 0, 10);
    p.set_coeff(0, series_of(0, 10, {{0, 0, 1}, {2, 1, 3}}));
    p.set_coeff(2, series_of(0, 10, {{1, -1, 2}}));
    ZPoly same = p.scaled_z(0);
    for (int d = 0; d <= 2; ++d) CHECK(agree(same.coeff(d), p.coeff(d)));

    // 1 + z + z^2 -> 1 + q^6 z + q^12 z^2
    ZPoly u(2, 0, 16);
    for (int d = 0; d <= 2; ++d) u.set_coeff(d, QSeries::one(16));
    ZPoly v = u.scaled_z(6);
    CHECK(agree(v.coeff(0), QSeries::one(16)));
    CHECK(agree(v.coeff(1), series_of(0, 16, {{6, 0, 1}})));
    CHECK(agree(v.coeff(2), series_of(0, 16, {{12, 0, 1}})));
}

TEST_CASE("finite pochhammer examples") {
    CHECK(agree(pochhammer_finite(Monomial{1, 0, 1}, 1, 0, 8), QSeries::one(8)));
    CHECK(agree(pochhammer_finite(Monomial{-1, -1, 2}, 6, 1, 8),
                series_of(0, 8, {{0, 0, 1}, {2, -1, 1}})));
    CHECK_THROWS_AS(pochhammer_finite(Monomial{1, 0, 1}, 1, -1, 8), std::invalid_argument);
}

TEST_CASE("infinite pochhammer examples") {
    // (q;q)_inf to order 6: pentagonal numbers 0, 1, 2, 5
    QSeries euler = pochhammer_infinite(Monomial{1, 0, 1}, 1, 6);
    CHECK(agree(euler, series_of(0, 6, {{0, 0, 1}, {1, 0, -1}, {2, 0, -1}, {5, 0, 1}})));
    // and against the pentagonal oracle at a deeper order
    CHECK(agree(pochhammer_infinite(Monomial{1, 0, 1}, 1, 60), pentagonal_series(60)));

    // argument entirely above the window
    CHECK(agree(pochhammer_infinite(Monomial{1, 0, 9}, 1, 8), QSeries::one(8)));

    // (-q^3;q^3)_inf to order 7
    CHECK(agree(pochhammer_infinite(Monomial{-1, 0, 3}, 3, 7),
                series_of(0, 7, {{0, 0, 1}, {3, 0, 1}, {6, 0, 1}})));

    CHECK_THROWS_AS(pochhammer_infinite(Monomial{1, 0, 1}, 0, 8), SeriesError);
}

TEST_CASE("qbinomial basics") {
    for (int n = 0; n <= 6; ++n) CHECK(agree(qbinomial(n, 0, 1, 10), QSeries::one(10)));
    CHECK(agree(qbinomial(2, 1, 1, 10), series_of(0, 10, {{0, 0, 1}, {1, 0, 1}})));
    CHECK_THROWS_AS(qbinomial(2, 3, 1, 10), std::invalid_argument);
}

TEST_CASE("qbinomial symmetry and Pascal recurrence") {
    for (int modulus : {1, 3}) {
        for (int n = 1; n <= 10; ++n) {
            int order = modulus * n * n + 1; // beyond the polynomial degree
            for (int m = 0; m <= n; ++m) {
                QSeries lhs = qbinomial(n, m, modulus, order);
                CHECK(agree(lhs, qbinomial(n, n - m, modulus, order)));
                if (m >= 1) {
                    QSeries rhs = m <= n - 1 ? qbinomial(n - 1, m, modulus, order)
                                             : QSeries(0, order);
                    rhs = rhs + qbinomial(n - 1, m - 1, modulus, order)
                                    .mul_monomial(Monomial{1, 0, modulus * (n - m)});
                    CHECK(agree(lhs, rhs));
                }
            }
        }
    }
}

TEST_CASE("qbinomial limit") {
    // [n m] -> 1/(q;q)_m once n is deep enough for the window
    for (int modulus : {1, 3}) {
        int order = 24;
        for (int m = 0; m <= 8; ++m) {
            int n = order / modulus + m;
            CHECK(agree(qbinomial(n, m, modulus, order),
                        pochhammer_finite(Monomial{1, 0, modulus}, modulus, m, order).inverse()));
        }
    }
}

TEST_CASE("ring axioms on random series") {
    std::mt19937 rng(99);
    for (int i = 0; i < 200; ++i) {
        int lo = static_cast<int>(rng() % 5) - 2;
        int order = lo + 2 + static_cast<int>(rng() % 10);
        QSeries a = random_series(rng, lo, order, false);
        QSeries b = random_series(rng, lo, order, false);
        QSeries c = random_series(rng, lo, order, false);
        CHECK(agree((a + b) + c, a + (b + c)));
        CHECK(agree(a * (b + c), a * b + a * c));
        CHECK(agree(a * b, b * a));
        CHECK(agree((a * b) * c, a * (b * c)));
    }
}

TEST_CASE("rewindow guards dropped coefficients") {
    QSeries s = series_of(-2, 6, {{-1, 0, 5}, {2, 1, 1}});
    CHECK_THROWS_AS(s.rewindowed(0, 6), SeriesError);
    QSeries padded = s.rewindowed(-4, 6);
    CHECK(padded.lo() == -4);
    CHECK(agree(padded, s));
    CHECK_THROWS_AS(s.rewindowed(-2, 8), SeriesError); // cannot extend upward
}

TEST_CASE("first_diff reports the minimal coordinate") {
    QSeries a = series_of(0, 10, {{2, -1, 3}, {2, 1, 4}, {5, 0, 1}});
    QSeries b = series_of(0, 10, {{2, -1, 3}, {2, 1, 5}, {4, 0, 7}});
    auto d = QSeries::first_diff(a, b);
    REQUIRE(d.has_value());
    CHECK(d->q_exp == 2);
    CHECK(d->t_exp == 1);
    CHECK(d->lhs == 4);
    CHECK(d->rhs == 5);
}
