#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "qcap/qdiff.hpp"
#include "qcap/theta.hpp"
#include "test_util.hpp"

using namespace qcap;
using qcap::testutil::series_of;

namespace {
const GapConfig kAllConfigs[] = {kConfigC1, kConfigC2, kConfigC2Star, kConfigC3};
}

TEST_CASE("finite C: initial values and the extension value") {
    QSeries c4 = finite_C(kConfigC1, 4, 10);
    CHECK(agree(c4, series_of(0, 10,
                              {{0, 0, 1}, {1, 1, 1}, {2, -1, 1}, {3, 0, 1}, {4, 1, 1}, {6, 0, 1}})));

    CHECK(agree(finite_C(kConfigC1, -2, 10), QSeries::one(10)));
    CHECK(agree(finite_C(kConfigC2Star, -2, 10), QSeries(0, 10))); // beta = 0

    CHECK_THROWS_AS(finite_C(kConfigC1, -1, 10), std::invalid_argument);
    CHECK_THROWS_AS(finite_C(kConfigC1, -3, 10), std::invalid_argument);
}

TEST_CASE("finite C equals brute-force enumeration") {
    for (const GapConfig& cfg : kAllConfigs) {
        FiniteCTable tbl(cfg, 16, 30);
        for (int m = 0; m <= 16; ++m)
            CHECK(agree(tbl.at(m), brute_force_series(cfg, m, 30)));
    }
    CHECK(agree(finite_C(kConfigC1, 10, 30), brute_force_series(kConfigC1, 10, 30)));
}

TEST_CASE("combined recurrence") {
    for (const GapConfig& cfg : kAllConfigs) CHECK(combined_recurrence_holds(cfg, 2, 30));
    for (int n = 3; n <= 8; ++n) CHECK(combined_recurrence_holds(kConfigC2, n, 30));
    CHECK_THROWS_AS(combined_recurrence_holds(kConfigC1, 1, 30), std::invalid_argument);
}

TEST_CASE("combined recurrence is sensitive to a flipped coefficient") {
    // rebuild the right side with one perturbed input and watch it break
    const GapConfig cfg = kConfigC1;
    const int n = 3, order = 30;
    FiniteCTable tbl(cfg, 3 * n + 1, order);
    QSeries a = tbl.at(3 * n - 2);
    a.add_term(5, 0, 1); // the perturbation
    QSeries rhs = a + a.mul_monomial(Monomial{1, 0, 3 * n}) +
                  tbl.at(3 * n - 5).mul_monomial(Monomial{1, -1, 3 * n - 1}) +
                  tbl.at(3 * n - 5).mul_monomial(Monomial{1, 1, 3 * n + 1}) +
                  tbl.at(3 * n - 5).mul_monomial(Monomial{1, 0, 6 * n}) +
                  tbl.at(3 * n - 8).mul_monomial(Monomial{1, 0, 6 * n - 3}) -
                  tbl.at(3 * n - 8).mul_monomial(Monomial{1, 0, 9 * n - 6});
    auto diff = QSeries::first_diff(tbl.at(3 * n + 1), rhs);
    REQUIRE(diff.has_value());
    CHECK(diff->q_exp == 5);
    CHECK(diff->t_exp == 0);
}

TEST_CASE("gamma sequence") {
    const int order = 30;
    for (const GapConfig& cfg : kAllConfigs) {
        auto gamma = gamma_seq(cfg, 8, order);
        CHECK(agree(gamma[0], QSeries::constant(cfg.beta, order)));

        QSeries c1 = QSeries::constant(1, order);
        c1.add_term(1, 1, cfg.alpha);
        QSeries inv13 = QSeries::one(order).mul_binomial_factor(-1, 0, 3).inverse();
        CHECK(agree(gamma[1], c1 * inv13));

        FiniteCTable tbl(cfg, 22, order);
        for (int n = 0; n <= 8; ++n) {
            QSeries recovered = gamma[static_cast<std::size_t>(n)] *
                                pochhammer_finite(Monomial{1, 0, 3}, 3, n, order);
            CHECK(agree(recovered, tbl.at(n == 0 ? -2 : 3 * n - 2)));
        }
    }
}

TEST_CASE("delta sequence initials and closed forms") {
    const int order = 30;
    for (const GapConfig& cfg : kAllConfigs) {
        auto delta = delta_seq(cfg, 12, order);
        CHECK(agree(delta[0], QSeries::constant(cfg.beta, order)));

        QSeries num = QSeries::constant(1 - cfg.beta, order);
        num.add_term(1, 1, cfg.alpha);
        QSeries inv13 = QSeries::one(order).mul_binomial_factor(-1, 0, 3).inverse();
        CHECK(agree(delta[1], num * inv13));

        for (int k = 0; k <= 12; ++k)
            CHECK(agree(delta[static_cast<std::size_t>(k)], delta_closed(cfg, k, order)));
    }
}

TEST_CASE("F and H assemble consistently") {
    const int order = 30, D = 8;
    for (const GapConfig& cfg : kAllConfigs) {
        auto [f, h] = build_F_H(cfg, D, order);
        CHECK(agree(h.coeff(0), QSeries::constant(cfg.beta, order)));
        CHECK(agree(f.coeff(1), gamma_seq(cfg, 1, order)[1]));

        ZPoly prod = neg_z_pochhammer(D, order).multiplied(h);
        for (int d = 0; d <= D; ++d) CHECK(agree(f.coeff(d), prod.coeff(d)));
    }
}

TEST_CASE("q-difference residuals vanish through degree D-2") {
    const int order = 30, D = 8;
    for (const GapConfig& cfg : kAllConfigs) {
        ZPoly rf = qdiff_residual(QDiffEquation::F, cfg, D, order);
        ZPoly rh = qdiff_residual(QDiffEquation::H, cfg, D, order);
        for (int d = 0; d <= D - 2; ++d) {
            CHECK(rf.coeff(d).is_zero());
            CHECK(rh.coeff(d).is_zero());
        }
    }
}

TEST_CASE("inhomogeneous term gate") {
    // the z^2 source term carries 1 - alpha - beta, which vanishes exactly
    // when alpha + beta = 1
    for (const GapConfig& cfg : kAllConfigs) {
        int coeff = 1 - cfg.alpha - cfg.beta;
        CHECK((coeff == 0) == (cfg.alpha + cfg.beta == 1));
    }
}

TEST_CASE("finite evaluation of C_{3n-2}") {
    const int order = 30;
    for (const GapConfig& cfg : kAllConfigs) {
        CHECK(agree(lemma_eval(cfg, 0, order), QSeries::constant(cfg.beta, order)));

        QSeries c1 = QSeries::constant(1, order);
        c1.add_term(1, 1, cfg.alpha);
        CHECK(agree(lemma_eval(cfg, 1, order), c1));

        for (int n = 2; n <= 6; ++n) {
            QSeries lemma = lemma_eval(cfg, n, order);
            CHECK(agree(lemma, finite_C(cfg, 3 * n - 2, order)));
            CHECK(agree(lemma, brute_force_series(cfg, 3 * n - 2, order)));
        }
    }
}

TEST_CASE("limit chain at order 30") {
    for (const GapConfig& cfg : kAllConfigs) {
        LimitChain chain = limit_chain(cfg, 30);
        CHECK(agree(chain.s0_direct, chain.s0_transformed));
        CHECK(agree(chain.rog0_lhs, chain.rog0_rhs));
        CHECK(agree(chain.c0_raw, chain.c0_final));
        CHECK(agree(chain.s1_direct, chain.s1_transformed));
        CHECK(agree(chain.rog1_lhs, chain.rog1_rhs));
        CHECK(agree(chain.c1_raw, chain.c1_final));
        CHECK(agree(chain.fold_lhs, chain.fold_rhs));
        CHECK(agree(chain.c0_final + chain.c1_final, chain.theorem_rhs));
        CHECK(agree(brute_force_series(cfg, std::nullopt, 30), chain.theorem_rhs));
    }
}

TEST_CASE("false theta terms drop when alpha + beta = 1") {
    // at (0,1) the assembled right side collapses to the theta quotient
    const int order = 30;
    QSeries rhs = limit_chain(kConfigC2, order).theorem_rhs;
    QSeries quotient = theta_sum(ThetaSpec{Monomial{1, 1, 4}, 6}, order) *
                       pochhammer_infinite(Monomial{1, 0, 3}, 3, order).inverse();
    CHECK(agree(rhs, quotient));

    QSeries rhs_star = limit_chain(kConfigC2Star, order).theorem_rhs;
    QSeries quotient_star = theta_sum(ThetaSpec{Monomial{1, 1, 1}, 6}, order) *
                            pochhammer_infinite(Monomial{1, 0, 3}, 3, order).inverse();
    CHECK(agree(rhs_star, quotient_star));
}

TEST_CASE("finite truncations stabilize onto the limit") {
    const GapConfig cfg = kConfigC2;
    // coefficients up to q^(3(n-2)) stop changing as n grows
    for (int n = 4; n <= 8; ++n) {
        QSeries small = finite_C(cfg, 3 * n - 2, 3 * (n - 2) + 1);
        QSeries big = finite_C(cfg, 3 * (n + 2) - 2, 3 * (n - 2) + 1);
        CHECK(agree(small, big));
    }
    // a deep finite evaluation agrees with the assembled limit
    const int order = 41;
    QSeries deep = lemma_eval(cfg, 20, order); // C_58, exact past the window
    CHECK(agree(deep, limit_chain(cfg, order).theorem_rhs));
}

TEST_CASE("t = 1 specialization matches the count identities") {
    const int order = 30;
    QSeries rhs2 = limit_chain(kConfigC2, order).theorem_rhs.at_t1();
    QSeries rhs2s = limit_chain(kConfigC2Star, order).theorem_rhs.at_t1();
    for (int n = 0; n < order; ++n) {
        CHECK(rhs2.coeff(n).coeff(0) == count_dj(1, n));
        CHECK(rhs2s.coeff(n).coeff(0) == count_dj(2, n));
    }
}

TEST_CASE("reindexing identity") {
    const int order = 100;
    QSeries lhs(0, order);
    for (long long k = 0; 3 * k * k + 5 * k + 2 < order; ++k)
        lhs = lhs + QSeries::monomial(Monomial{k % 2 ? -1 : 1, static_cast<int>(2 * k + 2),
                                               static_cast<int>(3 * k * k + 5 * k + 2)},
                                      order);
    QSeries rhs(0, order);
    for (long long k = -1; 3 * k * k + k < order; --k)
        rhs = rhs + QSeries::monomial(Monomial{k % 2 ? 1 : -1, static_cast<int>(-2 * k),
                                               static_cast<int>(3 * k * k + k)},
                                      order);
    CHECK(agree(lhs, rhs));
}
