#include "qcap/qdiff.hpp"

#include <algorithm>

#include "qcap/theta.hpp"

namespace qcap {

namespace {

using ll = long long;

Monomial qpow(int e) {
    return Monomial::make(1, 0, e);
}

// 1 / (q^3; q^3)_n on [0, order).
QSeries inv_qfact3(int n, int order) {
    return pochhammer_finite(qpow(3), 3, n, order).inverse();
}

QSeries pochpair_fin(const Monomial& a1, const Monomial& a2, int len, int order) {
    return pochhammer_finite(a1, 6, len, order) * pochhammer_finite(a2, 6, len, order);
}

QSeries pochpair_inf(const Monomial& a1, const Monomial& a2, int order) {
    return pochhammer_infinite(a1, 6, order) * pochhammer_infinite(a2, 6, order);
}

// Same convex-exponent term walk as in theta.cpp.
template <typename ExpFn, typename EmitFn>
void sum_convex(ExpFn e, ll order, EmitFn emit) {
    for (ll n = 0;; ++n) {
        ll en = e(n);
        if (en < order) {
            emit(n, en);
        } else if (e(n + 1) >= en) {
            return;
        }
    }
}

const Monomial kNegT1Q2{-1, -1, 2}; // -t^-1 q^2
const Monomial kNegTQ4{-1, 1, 4};   // -t q^4
const Monomial kNegT1Q5{-1, -1, 5}; // -t^-1 q^5
const Monomial kNegTQ7{-1, 1, 7};   // -t q^7
const Monomial kNegTQ1{-1, 1, 1};   // -t q

} // namespace

FiniteCTable::FiniteCTable(const GapConfig& cfg, int m_max, int order)
    : m_max_(m_max), c_minus2_(QSeries::constant(cfg.beta, order)) {
    if (m_max < 0) throw std::invalid_argument("FiniteCTable needs m_max >= 0");
    if (order < 1) throw SeriesError("FiniteCTable needs order >= 1");

    c_.reserve(static_cast<std::size_t>(m_max) + 1);
    // Partitions with parts <= 4 under the level-3 gap condition, listed
    // explicitly: {}, {1}, {2}, {3}, {4}, {4,2}.
    QSeries c0 = QSeries::one(order);
    c_.push_back(c0);
    auto push_with = [&](std::initializer_list<std::tuple<int, int, int>> extra) {
        QSeries s = c_.back();
        for (const auto& [q, t, c] : extra)
            if (q < order && c != 0) s.add_term(q, t, c);
        c_.push_back(std::move(s));
    };
    if (m_max >= 1) push_with({{1, 1, cfg.alpha}});
    if (m_max >= 2) push_with({{2, -1, cfg.beta}});
    if (m_max >= 3) push_with({{3, 0, 1}});
    if (m_max >= 4) push_with({{4, 1, 1}, {6, 0, cfg.beta}});

    for (int M = 5; M <= m_max; ++M) {
        QSeries s = c_[static_cast<std::size_t>(M - 1)];
        switch (M % 3) {
            case 2: // C_{3n-1} = C_{3n-2} + t^-1 q^(3n-1) C_{3n-5}
                s = s + c_[static_cast<std::size_t>(M - 4)].mul_monomial(Monomial{1, -1, M});
                break;
            case 0: // C_{3n} = C_{3n-1} + q^(3n) C_{3n-3}
                s = s + c_[static_cast<std::size_t>(M - 3)].mul_monomial(qpow(M));
                break;
            default: // C_{3n+1} = C_{3n} + t q^(3n+1) C_{3n-3} + q^(6n) C_{3n-5}
                s = s + c_[static_cast<std::size_t>(M - 4)].mul_monomial(Monomial{1, 1, M}) +
                    c_[static_cast<std::size_t>(M - 6)].mul_monomial(qpow(2 * (M - 1)));
                break;
        }
        c_.push_back(std::move(s));
    }
}

const QSeries& FiniteCTable::at(int M) const {
    if (M == -2) return c_minus2_;
    if (M < 0 || M > m_max_)
        throw std::invalid_argument("finite C index must be -2 or in [0, m_max]");
    return c_[static_cast<std::size_t>(M)];
}

QSeries finite_C(const GapConfig& cfg, int M, int order) {
    if (M < -2 || M == -1)
        throw std::invalid_argument("finite_C is defined for M = -2 and M >= 0");
    FiniteCTable tbl(cfg, std::max(0, M), order);
    return tbl.at(M);
}

std::optional<Discrepancy> combined_recurrence_diff(const GapConfig& cfg, int n, int order) {
    if (n < 2) throw std::invalid_argument("the combined recurrence needs n >= 2");
    FiniteCTable tbl(cfg, 3 * n + 1, order);
    const QSeries& lhs = tbl.at(3 * n + 1);
    const QSeries& a = tbl.at(3 * n - 2);
    const QSeries& b = tbl.at(3 * n - 5);
    const QSeries& c = tbl.at(3 * n - 8);
    QSeries rhs = a + a.mul_monomial(qpow(3 * n)) + b.mul_monomial(Monomial{1, -1, 3 * n - 1}) +
                  b.mul_monomial(Monomial{1, 1, 3 * n + 1}) + b.mul_monomial(qpow(6 * n)) +
                  c.mul_monomial(qpow(6 * n - 3)) - c.mul_monomial(qpow(9 * n - 6));
    return QSeries::first_diff(lhs, rhs);
}

bool combined_recurrence_holds(const GapConfig& cfg, int n, int order) {
    return !combined_recurrence_diff(cfg, n, order).has_value();
}

std::vector<QSeries> gamma_seq(const GapConfig& cfg, int n_max, int order) {
    if (n_max < 0) throw std::invalid_argument("gamma_seq needs n_max >= 0");
    std::vector<QSeries> g;
    g.reserve(static_cast<std::size_t>(n_max) + 1);
    g.push_back(QSeries::constant(cfg.beta, order));
    if (n_max >= 1) {
        QSeries c1 = QSeries::one(order);
        if (order > 1) c1.add_term(1, 1, cfg.alpha);
        g.push_back(c1 * QSeries::one(order).mul_binomial_factor(-1, 0, 3).inverse());
    }
    if (n_max >= 2) {
        QSeries c4 = finite_C(cfg, 4, order);
        QSeries den = QSeries::one(order).mul_binomial_factor(-1, 0, 3).mul_binomial_factor(-1, 0, 6);
        g.push_back(c4 * den.inverse());
    }
    for (int n = 3; n <= n_max; ++n) {
        // (1-q^(3n))(1-q^(3n-3)) gamma_n =
        //   (1-q^(6n-6)) gamma_(n-1)
        //   + (t^-1 q^(3n-4) + t q^(3n-2) + q^(6n-6)) gamma_(n-2)
        //   + q^(6n-9) gamma_(n-3)
        const QSeries& g1 = g[static_cast<std::size_t>(n - 1)];
        const QSeries& g2 = g[static_cast<std::size_t>(n - 2)];
        const QSeries& g3 = g[static_cast<std::size_t>(n - 3)];
        QSeries rhs = g1.mul_binomial_factor(-1, 0, 6 * n - 6) +
                      g2.mul_monomial(Monomial{1, -1, 3 * n - 4}) +
                      g2.mul_monomial(Monomial{1, 1, 3 * n - 2}) +
                      g2.mul_monomial(qpow(6 * n - 6)) + g3.mul_monomial(qpow(6 * n - 9));
        QSeries den =
            QSeries::one(order).mul_binomial_factor(-1, 0, 3 * n).mul_binomial_factor(-1, 0, 3 * n - 3);
        g.push_back(rhs * den.inverse());
    }
    return g;
}

std::vector<QSeries> delta_seq(const GapConfig& cfg, int n_max, int order) {
    if (n_max < 0) throw std::invalid_argument("delta_seq needs n_max >= 0");
    const int inhom = 1 - cfg.alpha - cfg.beta;
    std::vector<QSeries> d;
    d.reserve(static_cast<std::size_t>(n_max) + 1);
    d.push_back(QSeries::constant(cfg.beta, order));
    if (n_max >= 1) {
        QSeries num = QSeries::constant(1 - cfg.beta, order);
        if (order > 1) num.add_term(1, 1, cfg.alpha);
        d.push_back(num * QSeries::one(order).mul_binomial_factor(-1, 0, 3).inverse());
    }
    for (int n = 2; n <= n_max; ++n) {
        // delta_n = (1 + t^-1 q^(3n-4))(1 + t q^(3n-2))
        //           / ((1-q^(3n-3))(1-q^(3n))) delta_(n-2)
        //           + (1-alpha-beta) t (-1)^n q^(3n-2) / (q^3;q^3)_n
        QSeries num = d[static_cast<std::size_t>(n - 2)]
                          .mul_binomial_factor(1, -1, 3 * n - 4)
                          .mul_binomial_factor(1, 1, 3 * n - 2);
        QSeries den =
            QSeries::one(order).mul_binomial_factor(-1, 0, 3 * n - 3).mul_binomial_factor(-1, 0, 3 * n);
        QSeries next = num * den.inverse();
        if (inhom != 0 && 3 * n - 2 < order) {
            int e = 3 * n - 2;
            Monomial mono{n % 2 ? -inhom : inhom, 1, e};
            next = next + inv_qfact3(n, order - e).mul_monomial(mono);
        }
        d.push_back(std::move(next));
    }
    return d;
}

QSeries delta_closed(const GapConfig& cfg, int k, int order) {
    if (k < 0) throw std::invalid_argument("delta_closed needs k >= 0");
    const int inhom = 1 - cfg.alpha - cfg.beta;
    const bool even = k % 2 == 0;
    const int n = even ? k / 2 : (k - 1) / 2;
    const Monomial a1 = even ? kNegT1Q2 : kNegT1Q5;
    const Monomial a2 = even ? kNegTQ4 : kNegTQ7;

    QSeries prefix = pochpair_fin(a1, a2, n, order) * inv_qfact3(k, order);
    QSeries inner = QSeries::constant(even ? cfg.beta : 1 - cfg.beta, order);
    if (!even && order > 1) inner.add_term(1, 1, cfg.alpha);
    if (inhom != 0) {
        const int sign = even ? 1 : -1;
        for (int l = 1; l <= n; ++l) {
            int e = even ? 6 * l - 2 : 6 * l + 1;
            if (e >= order) break;
            Monomial mono{sign * inhom, 1, e};
            inner = inner + pochpair_fin(a1, a2, l, order - e).inverse().mul_monomial(mono);
        }
    }
    return prefix * inner;
}

std::pair<ZPoly, ZPoly> build_F_H(const GapConfig& cfg, int z_degree, int order) {
    if (z_degree < 3) throw std::invalid_argument("build_F_H needs z_degree >= 3");
    return {ZPoly(gamma_seq(cfg, z_degree, order)), ZPoly(delta_seq(cfg, z_degree, order))};
}

ZPoly neg_z_pochhammer(int z_degree, int order) {
    // (-z; q^3)_inf = sum_m z^m q^(3m(m-1)/2) / (q^3;q^3)_m
    ZPoly p(z_degree, 0, order);
    for (int m = 0; m <= z_degree; ++m) {
        ll e = 3LL * m * (m - 1) / 2;
        if (e >= order) continue;
        p.set_coeff(m, inv_qfact3(m, order - static_cast<int>(e))
                           .mul_monomial(qpow(static_cast<int>(e)))
                           .rewindowed(0, order));
    }
    return p;
}

ZPoly qdiff_residual(QDiffEquation eq, const GapConfig& cfg, int z_degree, int order) {
    if (z_degree < 3) throw std::invalid_argument("qdiff_residual needs z_degree >= 3");
    if (order < 1) throw SeriesError("qdiff_residual needs order >= 1");
    const int inhom = 1 - cfg.alpha - cfg.beta;
    const int D = z_degree;

    if (eq == QDiffEquation::F) {
        // q^3 (1-z) F(z) = (q^3 + 1 + z^2 t^-1 q^5 + z^2 t q^7) F(zq^3)
        //                  + (1 + zq^3)(-1 + z^2 q^9) F(zq^6)
        //                  + z^2 (1-alpha-beta) t q^7
        ZPoly F(gamma_seq(cfg, D, order));
        ZPoly F3 = F.scaled_z(3);
        ZPoly F6 = F.scaled_z(6);
        ZPoly lhs = (F - F.shifted_z(1)).scaled_monomial(qpow(3));
        ZPoly rhs = F3 + F3.scaled_monomial(qpow(3)) +
                    F3.shifted_z(2).scaled_monomial(Monomial{1, -1, 5}) +
                    F3.shifted_z(2).scaled_monomial(Monomial{1, 1, 7});
        ZPoly t2 = F6 + F6.shifted_z(1).scaled_monomial(qpow(3));
        rhs -= t2;
        rhs += t2.shifted_z(2).scaled_monomial(qpow(9));
        if (inhom != 0 && D >= 2 && 7 < order) {
            ZPoly i(D, 0, order);
            i.set_coeff(2, QSeries::monomial(Monomial{inhom, 1, 7}, order).rewindowed(0, order));
            rhs += i;
        }
        return lhs - rhs;
    }

    // q^3 (1-z^2) H(z) = (q^3 + 1 + z^2 t^-1 q^5 + z^2 t q^7) H(zq^3)
    //                    + (-1 + z^2 q^9) H(zq^6)
    //                    + (1-alpha-beta) t sum_n (-1)^n z^(n+2) q^(3n+7) / (q^3;q^3)_n
    ZPoly H(delta_seq(cfg, D, order));
    ZPoly H3 = H.scaled_z(3);
    ZPoly H6 = H.scaled_z(6);
    ZPoly lhs = (H - H.shifted_z(2)).scaled_monomial(qpow(3));
    ZPoly rhs = H3 + H3.scaled_monomial(qpow(3)) +
                H3.shifted_z(2).scaled_monomial(Monomial{1, -1, 5}) +
                H3.shifted_z(2).scaled_monomial(Monomial{1, 1, 7});
    rhs -= H6;
    rhs += H6.shifted_z(2).scaled_monomial(qpow(9));
    if (inhom != 0) {
        ZPoly i(D, 0, order);
        for (int n = 0; n + 2 <= D; ++n) {
            int e = 3 * n + 7;
            if (e >= order) break;
            Monomial mono{n % 2 ? -inhom : inhom, 1, e};
            i.set_coeff(n + 2, inv_qfact3(n, order - e).mul_monomial(mono).rewindowed(0, order));
        }
        rhs += i;
    }
    return lhs - rhs;
}

QSeries lemma_eval(const GapConfig& cfg, int n, int order) {
    if (n < 0) throw std::invalid_argument("lemma_eval needs n >= 0");
    if (order < 1) throw SeriesError("lemma_eval needs order >= 1");
    const int inhom = 1 - cfg.alpha - cfg.beta;
    QSeries acc(0, order);

    // j running over the parity of n: the even-index coefficient family.
    for (int j = n % 2; j <= n; j += 2) {
        ll e0 = 3LL * j * (j - 1) / 2;
        if (e0 >= order) continue;
        int r = (n - j) / 2;
        QSeries base = qbinomial(n, j, 3, order - static_cast<int>(e0))
                           .mul_monomial(qpow(static_cast<int>(e0)));
        base = base * pochpair_fin(kNegT1Q2, kNegTQ4, r, order);
        QSeries inner = QSeries::constant(cfg.beta, order);
        if (inhom != 0) {
            for (int l = 1; l <= r; ++l) {
                int e = 6 * l - 2;
                if (e >= order) break;
                inner = inner + pochpair_fin(kNegT1Q2, kNegTQ4, l, order - e)
                                    .inverse()
                                    .mul_monomial(Monomial{inhom, 1, e});
            }
        }
        acc = acc + base * inner;
    }

    // j running over the parity of n-1: the odd-index family.
    for (int j = (n - 1 >= 0) ? (n - 1) % 2 : 0; j <= n - 1; j += 2) {
        ll e0 = 3LL * j * (j - 1) / 2;
        if (e0 >= order) continue;
        int r = (n - 1 - j) / 2;
        QSeries base = qbinomial(n, j, 3, order - static_cast<int>(e0))
                           .mul_monomial(qpow(static_cast<int>(e0)));
        base = base * pochpair_fin(kNegT1Q5, kNegTQ7, r, order);
        QSeries inner = QSeries::constant(1 - cfg.beta, order);
        if (order > 1) inner.add_term(1, 1, cfg.alpha);
        if (inhom != 0) {
            for (int l = 1; l <= r; ++l) {
                int e = 6 * l + 1;
                if (e >= order) break;
                inner = inner - pochpair_fin(kNegT1Q5, kNegTQ7, l, order - e)
                                    .inverse()
                                    .mul_monomial(Monomial{inhom, 1, e});
            }
        }
        acc = acc + base * inner;
    }
    return acc;
}

LimitChain limit_chain(const GapConfig& cfg, int order) {
    if (order < 4) throw SeriesError("limit_chain needs order >= 4");
    const int N = order;
    const int A = cfg.alpha;
    const int B = cfg.beta;
    const int C = 1 - A - B;

    const QSeries negq3 = pochhammer_infinite(Monomial{-1, 0, 3}, 3, N); // (-q^3;q^3)_inf
    const QSeries p0_inf = pochpair_inf(kNegT1Q2, kNegTQ4, N);
    const QSeries p1_inf = pochpair_inf(kNegT1Q5, kNegTQ7, N);
    const QSeries p1b_inf = pochpair_inf(kNegTQ1, kNegT1Q5, N);
    const QSeries ft1_split = false_theta(1, FalseThetaForm::split, N);
    const QSeries ft1_char = false_theta(1, FalseThetaForm::character, N);
    const QSeries ft2_char = false_theta(2, FalseThetaForm::character, N);

    // s0 = sum_{l>=1} q^(6l-2) / (-t^-1 q^2, -t q^4; q^6)_l
    QSeries s0(0, N);
    for (int l = 1; 6 * l - 2 < N; ++l) {
        int e = 6 * l - 2;
        s0 = s0 + pochpair_fin(kNegT1Q2, kNegTQ4, l, N - e).inverse().mul_monomial(qpow(e));
    }

    // k0 = sum_{k>=0} (-1)^k q^(3k^2+k) t^(-2k)     (plain alternating sum)
    // k1 = same sum with an extra 1/(-t^-1 q^2; q^6)_(k+1)
    QSeries k0(0, N), k1(0, N);
    sum_convex([](ll k) { return 3 * k * k + k; }, N, [&](ll k, ll e) {
        Monomial mono{k % 2 ? -1 : 1, static_cast<int>(-2 * k), static_cast<int>(e)};
        k0 = k0 + QSeries::monomial(mono, N);
        k1 = k1 + pochhammer_finite(kNegT1Q2, 6, static_cast<int>(k) + 1, N - static_cast<int>(e))
                      .inverse()
                      .mul_monomial(mono);
    });
    QSeries s0_transformed =
        k1.mul_monomial(Monomial{1, -1, 0}) - (k0 * p0_inf.inverse()).mul_monomial(Monomial{1, -1, 0});

    QSeries inner0 = QSeries::constant(B, N);
    if (C != 0) inner0 = inner0 + s0.mul_monomial(Monomial{C, 1, 0});
    QSeries c0_raw = p0_inf * negq3 * inner0;
    QSeries c0_final =
        negq3 * (k0.scaled(-C) + p0_inf * (QSeries::constant(B, N) + ft1_split.scaled(C)));

    // s1 = sum_{l>=1} q^(6l+1) / (-t^-1 q^5, -t q^7; q^6)_l
    QSeries s1(0, N);
    for (int l = 1; 6 * l + 1 < N; ++l) {
        int e = 6 * l + 1;
        s1 = s1 + pochpair_fin(kNegT1Q5, kNegTQ7, l, N - e).inverse().mul_monomial(qpow(e));
    }

    // l0 = sum_{k>=0} (-1)^k q^(3k^2+5k) t^(2k)
    // l1 = same with an extra 1/(-t q^7; q^6)_k
    QSeries l0(0, N), l1(0, N);
    sum_convex([](ll k) { return 3 * k * k + 5 * k; }, N, [&](ll k, ll e) {
        Monomial mono{k % 2 ? -1 : 1, static_cast<int>(2 * k), static_cast<int>(e)};
        l0 = l0 + QSeries::monomial(mono, N);
        l1 = l1 + pochhammer_finite(kNegTQ7, 6, static_cast<int>(k), N - static_cast<int>(e))
                      .inverse()
                      .mul_monomial(mono);
    });
    // s1 = -q + q(1+tq) l1 - t q^2 l0 / (-t^-1 q^5, -t q^7; q^6)_inf
    QSeries s1_transformed = QSeries::monomial(Monomial{-1, 0, 1}, N) +
                             (l1 + l1.mul_monomial(Monomial{1, 1, 1})).mul_monomial(qpow(1)) -
                             (l0 * p1_inf.inverse()).mul_monomial(Monomial{1, 1, 2});

    // rog1: sum_k t^(3k) q^(9k^2+6k) (1 - t^2 q^(12k+8))
    QSeries rog1_rhs(0, N);
    sum_convex([](ll k) { return 9 * k * k + 6 * k; }, N, [&](ll k, ll e) {
        rog1_rhs = rog1_rhs +
                   QSeries::monomial(Monomial{1, static_cast<int>(3 * k), static_cast<int>(e)}, N);
    });
    sum_convex([](ll k) { return 9 * k * k + 18 * k + 8; }, N, [&](ll k, ll e) {
        rog1_rhs = rog1_rhs + QSeries::monomial(
                                  Monomial{-1, static_cast<int>(3 * k + 2), static_cast<int>(e)}, N);
    });

    QSeries inner1 = QSeries::constant(1 - B, N);
    if (N > 1) inner1.add_term(1, 1, A);
    if (C != 0) inner1 = inner1 - s1.mul_monomial(Monomial{C, 1, 0});
    QSeries c1_raw = p1_inf * negq3 * inner1;

    // k2 = sum_{k>=0} (-1)^k t^(2k+2) q^(3k^2+5k+2)
    QSeries k2(0, N);
    sum_convex([](ll k) { return 3 * k * k + 5 * k + 2; }, N, [&](ll k, ll e) {
        k2 = k2 + QSeries::monomial(
                      Monomial{k % 2 ? -1 : 1, static_cast<int>(2 * k + 2), static_cast<int>(e)}, N);
    });
    // s2 = sum_{k>=0} (t^(3k+1) q^((3k+1)^2) - t^(3k+3) q^((3k+3)^2))
    QSeries s2(0, N);
    sum_convex([](ll k) { return (3 * k + 1) * (3 * k + 1); }, N, [&](ll k, ll e) {
        s2 = s2 + QSeries::monomial(Monomial{1, static_cast<int>(3 * k + 1), static_cast<int>(e)}, N);
    });
    sum_convex([](ll k) { return (3 * k + 3) * (3 * k + 3); }, N, [&](ll k, ll e) {
        s2 = s2 + QSeries::monomial(Monomial{-1, static_cast<int>(3 * k + 3), static_cast<int>(e)}, N);
    });

    QSeries fold_lhs = QSeries::constant(1 - B, N) - s2.scaled(C);
    QSeries fold_rhs = QSeries::constant(A, N) + ft2_char.scaled(C);
    QSeries c1_final = negq3 * (k2.scaled(C) + p1b_inf * fold_lhs);

    // theorem right side, assembled from theta and false theta evaluations
    QSeries inv_q3 = pochhammer_infinite(qpow(3), 3, N).inverse();
    QSeries th_t2q2 = theta_sum(ThetaSpec{Monomial{-1, 2, 2}, 6}, N);
    QSeries th_tq4 = theta_sum(ThetaSpec{Monomial{1, 1, 4}, 6}, N);
    QSeries th_tq = theta_sum(ThetaSpec{Monomial{1, 1, 1}, 6}, N);
    QSeries theorem_rhs = (negq3 * th_t2q2).scaled(A + B - 1) +
                          th_tq4 * inv_q3 * (QSeries::constant(B, N) + ft1_char.scaled(C)) +
                          th_tq * inv_q3 * (QSeries::constant(A, N) + ft2_char.scaled(C));

    LimitChain out{std::move(c0_raw),   std::move(c0_final), std::move(c1_raw),
                   std::move(c1_final), std::move(theorem_rhs),
                   std::move(s0),       std::move(s0_transformed),
                   std::move(k1),       ft1_split,
                   std::move(s1),       std::move(s1_transformed),
                   std::move(l1),       std::move(rog1_rhs),
                   std::move(fold_lhs), std::move(fold_rhs)};
    return out;
}

} // namespace qcap
