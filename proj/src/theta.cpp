#include "qcap/theta.hpp"

#include <cstdlib>
#include <vector>

namespace qcap {

namespace {

using ll = long long;

// Emits (n, e(n)) for n = 0, 1, ... while terms can land below `order`.
// The exponent functions here are convex in n, so the first n with
// e(n) >= order and e(n+1) >= e(n) ends the sum for good.
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

} // namespace

QSeries theta_sum(const ThetaSpec& spec, int order) {
    if (spec.modulus < 1) throw std::invalid_argument("theta modulus must be positive");
    if (!spec.z.is_unit()) throw std::invalid_argument("theta argument must be a unit monomial");
    if (order < 1) throw SeriesError("theta window is empty");

    const ll b = spec.z.q_exp;
    const ll M = spec.modulus;
    auto E = [&](ll k) { return b * k + M * k * (k - 1) / 2; };

    // The exponent is an upward parabola in k, so {k : E(k) < order} is a
    // finite interval; walk out of k = 0 in both directions until the
    // exponent has crossed the bound on its increasing branch.
    std::vector<std::pair<ll, ll>> terms; // (k, exponent)
    sum_convex([&](ll n) { return E(n); }, order, [&](ll n, ll e) { terms.emplace_back(n, e); });
    sum_convex([&](ll n) { return E(-1 - n); }, order,
               [&](ll n, ll e) { terms.emplace_back(-1 - n, e); });

    ll lo = 0;
    for (const auto& [k, e] : terms) lo = std::min(lo, e);
    QSeries r(static_cast<int>(lo), order);
    for (const auto& [k, e] : terms) {
        Monomial zk = spec.z.pow(static_cast<int>(k));
        r.add_term(static_cast<int>(e), zk.t_exp, zk.coeff);
    }
    return r;
}

QSeries theta_product(const ThetaSpec& spec, int order) {
    if (spec.modulus < 1) throw std::invalid_argument("theta modulus must be positive");
    if (!spec.z.is_unit()) throw std::invalid_argument("theta argument must be a unit monomial");
    if (order < 1) throw SeriesError("theta window is empty");

    const int M = spec.modulus;
    const Monomial qM = Monomial::make(1, 0, M);
    auto build = [&](int n) {
        QSeries f = pochhammer_infinite(-spec.z, M, n);
        f = f * pochhammer_infinite(-(spec.z.inverse() * qM), M, n);
        return f * pochhammer_infinite(qM, M, n);
    };
    // Factors with nonpositive q-exponents push the window down and cost
    // output order; rebuild deep enough to deliver the requested order.
    QSeries r = build(order);
    if (r.order() < order) r = build(2 * order - r.order());
    return r;
}

int chi3(long long m) noexcept {
    switch (((m % 3) + 3) % 3) {
        case 0: return 1;
        case 1: return -1;
        default: return 0;
    }
}

QSeries false_theta(int which, FalseThetaForm form, int order) {
    if (which != 1 && which != 2) throw std::invalid_argument("false theta index must be 1 or 2");
    if (order < 1) throw SeriesError("false theta window is empty");
    QSeries r(0, order);
    if (form == FalseThetaForm::character) {
        // sum_{k>=0} chi3(k) t^(-k) q^(k(k+1))  resp.  chi3(k) t^k q^(k^2)
        auto E = [&](ll k) { return which == 1 ? k * (k + 1) : k * k; };
        sum_convex(E, order, [&](ll k, ll e) {
            int c = chi3(k);
            if (c != 0) r.add_term(static_cast<int>(e), which == 1 ? -static_cast<int>(k) : static_cast<int>(k), c);
        });
    } else {
        // chi3 is supported on k = 0, 1 mod 3 with signs +, -; writing
        // k = 3j and k = 3j+1 gives two plain one-sided families.
        auto Ep = [&](ll j) { ll k = 3 * j; return which == 1 ? k * (k + 1) : k * k; };
        auto Em = [&](ll j) { ll k = 3 * j + 1; return which == 1 ? k * (k + 1) : k * k; };
        sum_convex(Ep, order, [&](ll j, ll e) {
            int te = static_cast<int>(3 * j);
            r.add_term(static_cast<int>(e), which == 1 ? -te : te, 1);
        });
        sum_convex(Em, order, [&](ll j, ll e) {
            int te = static_cast<int>(3 * j + 1);
            r.add_term(static_cast<int>(e), which == 1 ? -te : te, -1);
        });
    }
    return r;
}

std::pair<QSeries, QSeries> euler_sides(int variant, const Monomial& x, int modulus, int order) {
    if (variant != 1 && variant != 2) throw std::invalid_argument("euler variant must be 1 or 2");
    if (modulus < 1) throw std::invalid_argument("euler modulus must be positive");
    if (order < 1) throw SeriesError("euler window is empty");
    if (x.q_exp < 1) throw SeriesError("euler sums need x with positive q-exponent");

    const int M = modulus;
    const Monomial qM = Monomial::make(1, 0, M);
    QSeries rhs(0, order);
    if (variant == 1) {
        // 1/(x;q)_inf = sum_n x^n / (q;q)_n
        sum_convex([&](ll n) { return static_cast<ll>(x.q_exp) * n; }, order, [&](ll n, ll e) {
            QSeries term = pochhammer_finite(qM, M, static_cast<int>(n), order - static_cast<int>(e)).inverse();
            rhs = rhs + term.mul_monomial(x.pow(static_cast<int>(n)));
        });
        return {pochhammer_infinite(x, M, order).inverse(), rhs};
    }
    // (x;q)_inf = sum_n (-1)^n x^n q^(n(n-1)/2) / (q;q)_n
    sum_convex([&](ll n) { return static_cast<ll>(x.q_exp) * n + M * n * (n - 1) / 2; }, order,
               [&](ll n, ll e) {
                   Monomial mono = x.pow(static_cast<int>(n)) *
                                   Monomial::make(n % 2 ? -1 : 1, 0, static_cast<int>(M * n * (n - 1) / 2));
                   QSeries term =
                       pochhammer_finite(qM, M, static_cast<int>(n), order - static_cast<int>(e)).inverse();
                   rhs = rhs + term.mul_monomial(mono);
               });
    return {pochhammer_infinite(x, M, order), rhs};
}

CauchyEvenSides cauchy_even_sides(int modulus, int order) {
    if (modulus < 1) throw std::invalid_argument("cauchy modulus must be positive");
    if (order < 1) throw SeriesError("cauchy window is empty");
    const int M = modulus;
    const Monomial qM = Monomial::make(1, 0, M);

    QSeries even_sum(0, order);
    sum_convex([&](ll j) { ll n = 2 * j; return M * n * (n - 1) / 2; }, order, [&](ll j, ll e) {
        int n = static_cast<int>(2 * j);
        QSeries term = pochhammer_finite(qM, M, n, order - static_cast<int>(e)).inverse();
        even_sum = even_sum + term.mul_monomial(Monomial::make(1, 0, static_cast<int>(e)));
    });

    QSeries inverse_product = pochhammer_infinite(qM, 2 * M, order).inverse();
    QSeries neg_poch = pochhammer_infinite(Monomial::make(-1, 0, M), M, order);
    return {std::move(even_sum), std::move(inverse_product), std::move(neg_poch)};
}

std::pair<QSeries, QSeries> ramanujan_sides(const Monomial& a, const Monomial& b, int modulus,
                                            int order) {
    if (modulus < 1) throw std::invalid_argument("modulus must be positive");
    if (order < 1) throw SeriesError("window is empty");
    if (!a.is_unit()) throw SeriesError("the transformed side divides by a, so a must be a unit monomial");
    const int M = modulus;
    const Monomial naq{-a.coeff, a.t_exp, a.q_exp + M};
    const Monomial nbq{-b.coeff, b.t_exp, b.q_exp + M};
    if (naq.q_exp < 1 || nbq.q_exp < 1)
        throw SeriesError("-aq and -bq must have positive q-exponent in the substituted base");

    // Left side: sum_n q^n / ((-aq;q)_n (-bq;q)_n), exponents >= 0.
    QSeries lhs(0, order);
    sum_convex([&](ll n) { return static_cast<ll>(M) * n; }, order, [&](ll n, ll e) {
        int rest = order - static_cast<int>(e);
        QSeries den = pochhammer_finite(naq, M, static_cast<int>(n), rest) *
                      pochhammer_finite(nbq, M, static_cast<int>(n), rest);
        lhs = lhs + den.inverse().mul_monomial(Monomial::make(1, 0, static_cast<int>(e)));
    });

    // Right side. The a^-1 prefactors shift the window down by a.q_exp,
    // and (b/a)^n may dip below zero for small n; over-allocate so the
    // assembled side still reaches the requested order.
    const Monomial ba = b * a.inverse();
    const int pad = std::max(0, a.q_exp);
    const int big = order + pad;
    auto term_exp = [&](ll n) { return static_cast<ll>(M) * n * (n + 1) / 2 + static_cast<ll>(ba.q_exp) * n; };

    std::vector<std::pair<ll, ll>> monos; // (n, exponent) of the plain sum
    sum_convex(term_exp, big, [&](ll n, ll e) { monos.emplace_back(n, e); });
    ll min_e = 0;
    for (const auto& [n, e] : monos) min_e = std::min(min_e, e);

    QSeries sum1(0, big);
    sum_convex(term_exp, big, [&](ll n, ll e) {
        Monomial mono = ba.pow(static_cast<int>(n)) *
                        Monomial::make(n % 2 ? -1 : 1, 0, static_cast<int>(M * n * (n + 1) / 2));
        QSeries term = pochhammer_finite(nbq, M, static_cast<int>(n), big - static_cast<int>(e)).inverse();
        sum1 = sum1 + term.mul_monomial(mono);
    });

    const int deep = big - static_cast<int>(min_e);
    QSeries inv_prod =
        (pochhammer_infinite(naq, M, deep) * pochhammer_infinite(nbq, M, deep)).inverse();
    QSeries part2(static_cast<int>(min_e) - pad, order);
    for (const auto& [n, e] : monos) {
        Monomial mono = ba.pow(static_cast<int>(n)) *
                        Monomial::make(n % 2 ? -1 : 1, 0, static_cast<int>(M * n * (n + 1) / 2));
        part2 = part2 + inv_prod.mul_monomial(mono * a.inverse());
    }

    QSeries rhs = sum1 + sum1.mul_monomial(a.inverse()) - part2;
    return {std::move(lhs), std::move(rhs)};
}

std::pair<QSeries, QSeries> rogers_sides(const Monomial& y, int modulus, int order) {
    if (modulus < 1) throw std::invalid_argument("modulus must be positive");
    if (order < 1) throw SeriesError("window is empty");
    if (!y.is_unit()) throw SeriesError("rogers argument must be a unit monomial");
    const int M = modulus;
    const Monomial yq = y * Monomial::make(1, 0, M);
    if (yq.q_exp < 1) throw SeriesError("yq must have positive q-exponent in the substituted base");

    // sum_n (-1)^n y^(2n) q^(n(n+1)/2) / (yq;q)_n
    QSeries lhs(0, order);
    sum_convex(
        [&](ll n) { return 2 * static_cast<ll>(y.q_exp) * n + static_cast<ll>(M) * n * (n + 1) / 2; },
        order, [&](ll n, ll e) {
            Monomial mono = y.pow(static_cast<int>(2 * n)) *
                            Monomial::make(n % 2 ? -1 : 1, 0, static_cast<int>(M * n * (n + 1) / 2));
            QSeries term =
                pochhammer_finite(yq, M, static_cast<int>(n), order - static_cast<int>(e)).inverse();
            lhs = lhs + term.mul_monomial(mono);
        });

    // sum_n (-1)^n y^(3n) q^(n(3n+1)/2) (1 - y^2 q^(2n+1))
    QSeries rhs(0, order);
    sum_convex(
        [&](ll n) { return 3 * static_cast<ll>(y.q_exp) * n + static_cast<ll>(M) * n * (3 * n + 1) / 2; },
        order, [&](ll n, ll) {
            Monomial mono = y.pow(static_cast<int>(3 * n)) *
                            Monomial::make(n % 2 ? -1 : 1, 0, static_cast<int>(M * n * (3 * n + 1) / 2));
            rhs = rhs + QSeries::monomial(mono, order);
        });
    sum_convex(
        [&](ll n) {
            return (3 * n + 2) * static_cast<ll>(y.q_exp) + static_cast<ll>(M) * n * (3 * n + 1) / 2 +
                   static_cast<ll>(M) * (2 * n + 1);
        },
        order, [&](ll n, ll) {
            Monomial mono = y.pow(static_cast<int>(3 * n + 2)) *
                            Monomial::make(n % 2 ? 1 : -1, 0,
                                           static_cast<int>(M * n * (3 * n + 1) / 2 + M * (2 * n + 1)));
            rhs = rhs + QSeries::monomial(mono, order);
        });
    return {std::move(lhs), std::move(rhs)};
}

} // namespace qcap
