#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qcap/errors.hpp"
#include "qcap/tlaurent.hpp"

namespace qcap {

// A monomial c * t^a * q^b. Carries substitution arguments such as
// z = t q^4 or y = -t q^(-1), so the q-exponent may be negative.
struct Monomial {
    BigInt coeff = 0;
    int t_exp = 0;
    int q_exp = 0;

    static Monomial make(BigInt c, int t_exp = 0, int q_exp = 0) {
        return Monomial{std::move(c), t_exp, q_exp};
    }

    bool is_zero() const { return coeff == 0; }
    bool is_unit() const { return coeff == 1 || coeff == -1; }

    Monomial operator*(const Monomial& o) const {
        return {coeff * o.coeff, t_exp + o.t_exp, q_exp + o.q_exp};
    }
    Monomial operator-() const { return {-coeff, t_exp, q_exp}; }

    // Requires |coeff| == 1 so the result stays integral.
    Monomial inverse() const;
    // Integer power; negative n requires |coeff| == 1.
    Monomial pow(int n) const;

    std::string str() const;
};

// First coefficient at which two series disagree, in (q_exp, t_exp) order.
struct Discrepancy {
    int q_exp = 0;
    int t_exp = 0;
    BigInt lhs;
    BigInt rhs;
};

// Truncated Laurent series in q with TLaurent coefficients: an element of
// Z[t, t^-1]((q)) tracked exactly on the window [lo, order).
//
// Window semantics: the series is identically zero below lo (every
// constructor in this library guarantees it), stored exactly for
// exponents in [lo, order), and unknown at order and above. Sums may
// therefore extend down to the smaller lo, while products obey
//   [lo1, N1) * [lo2, N2) -> [lo1+lo2, min(lo1+N2, lo2+N1)).
class QSeries {
  public:
    // Zero series on [lo, order).
    QSeries(int lo, int order);

    static QSeries zero(int lo, int order) { return QSeries(lo, order); }
    static QSeries one(int order) { return constant(1, order); }
    static QSeries constant(const BigInt& c, int order);
    // Window [min(0, m.q_exp), order).
    static QSeries monomial(const Monomial& m, int order);

    int lo() const { return lo_; }
    int order() const { return lo_ + static_cast<int>(coeffs_.size()); }

    // Coefficient of q^e: stored value in-window, zero below lo.
    // Requesting e >= order is a window violation.
    const TLaurent& coeff(int q_exp) const;
    void add_term(int q_exp, int t_exp, const BigInt& c);

    bool is_zero() const;
    // Lowest exponent with a nonzero coefficient, if any.
    std::optional<int> lowest_nonzero() const;

    QSeries truncated(int new_order) const;
    // Extends or shrinks the window; shrinking from below is only legal
    // when the dropped coefficients are zero (checked).
    QSeries rewindowed(int new_lo, int new_order) const;

    QSeries operator-() const;
    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    // Truncating Cauchy product; exact integer arithmetic.
    friend QSeries operator*(const QSeries& a, const QSeries& b);

    // Exact multiplications that shift the window instead of truncating.
    QSeries mul_monomial(const Monomial& m) const;
    // Multiply by (1 + c t^e q^s); window moves by min(0, s).
    QSeries mul_binomial_factor(const BigInt& c, int t_exp, int q_shift) const;
    QSeries scaled(const BigInt& c) const;
    // Multiply every coefficient by a fixed Laurent polynomial in t.
    QSeries scaled(const TLaurent& f) const;

    // Multiplicative inverse. The lowest nonzero coefficient must be a
    // single monomial +-t^e (a unit); for lowest exponent m the result
    // window is [-m, order - 2m).
    QSeries inverse() const;

    // q -> q^k (k >= 1); exponents scale, t-content is unchanged.
    // Result window is [k*lo, k*order).
    QSeries substituted_q(int k) const;

    // Collapse t = 1: every coefficient becomes its coefficient sum.
    QSeries at_t1() const;

    // First disagreement over [min(lo), min(order)), scanning q ascending
    // then t ascending. Relies on the zero-below-lo invariant.
    static std::optional<Discrepancy> first_diff(const QSeries& a, const QSeries& b);

    // Visit nonzero terms in ascending (q_exp, t_exp) order.
    void for_each_term(const std::function<void(int q_exp, int t_exp, const BigInt&)>& fn) const;

    std::string str() const;

  private:
    int lo_;
    std::vector<TLaurent> coeffs_; // index i <-> exponent lo_ + i

    TLaurent& mutable_coeff(int q_exp);
};

inline bool agree(const QSeries& a, const QSeries& b) {
    return !QSeries::first_diff(a, b).has_value();
}

// (a; q^modulus)_n = prod_{j=0}^{n-1} (1 - a q^(modulus*j)), exact on the
// returned window.
QSeries pochhammer_finite(const Monomial& a, int modulus, int n, int order);

// (a; q^modulus)_infty: factors are applied until they can no longer
// touch the window. Requires modulus >= 1 so the factor exponents grow.
QSeries pochhammer_infinite(const Monomial& a, int modulus, int order);

// Gaussian binomial [n m] at q -> q^modulus, computed as
// (q;q)_n / ((q;q)_m (q;q)_{n-m}) by exactness-checked polynomial
// division, then truncated to the window [0, order).
QSeries qbinomial(int n, int m, int modulus, int order);

} // namespace qcap
