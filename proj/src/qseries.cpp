#include "qcap/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace qcap {

namespace {
const TLaurent kZeroCoeff;

std::string window_str(int lo, int order) {
    std::ostringstream os;
    os << "[" << lo << ", " << order << ")";
    return os.str();
}
} // namespace

Monomial Monomial::inverse() const {
    if (!is_unit()) throw SeriesError("monomial inverse requires coefficient +-1");
    return {coeff, -t_exp, -q_exp};
}

Monomial Monomial::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    BigInt c = 1;
    for (int i = 0; i < n; ++i) c *= coeff;
    return {std::move(c), t_exp * n, q_exp * n};
}

std::string Monomial::str() const {
    std::ostringstream os;
    os << coeff;
    if (t_exp != 0) os << "*t^" << t_exp;
    if (q_exp != 0) os << "*q^" << q_exp;
    return os.str();
}

QSeries::QSeries(int lo, int order) : lo_(lo) {
    if (order <= lo) throw SeriesError("empty series window " + window_str(lo, order));
    coeffs_.resize(static_cast<std::size_t>(order - lo));
}

QSeries QSeries::constant(const BigInt& c, int order) {
    QSeries s(0, order);
    if (c != 0) s.coeffs_[0] = TLaurent::constant(c);
    return s;
}

QSeries QSeries::monomial(const Monomial& m, int order) {
    QSeries s(std::min(0, m.q_exp), order);
    if (m.q_exp < order && m.coeff != 0) s.mutable_coeff(m.q_exp) = TLaurent::term(m.coeff, m.t_exp);
    return s;
}

const TLaurent& QSeries::coeff(int q_exp) const {
    if (q_exp < lo_) return kZeroCoeff; // exactly zero below the window
    if (q_exp >= order()) throw SeriesError("coefficient request above window " + window_str(lo_, order()));
    return coeffs_[static_cast<std::size_t>(q_exp - lo_)];
}

TLaurent& QSeries::mutable_coeff(int q_exp) {
    if (q_exp < lo_ || q_exp >= order())
        throw SeriesError("coefficient write outside window " + window_str(lo_, order()));
    return coeffs_[static_cast<std::size_t>(q_exp - lo_)];
}

void QSeries::add_term(int q_exp, int t_exp, const BigInt& c) {
    mutable_coeff(q_exp).add_term(t_exp, c);
}

bool QSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const TLaurent& f) { return f.is_zero(); });
}

std::optional<int> QSeries::lowest_nonzero() const {
    for (int e = lo_; e < order(); ++e)
        if (!coeff(e).is_zero()) return e;
    return std::nullopt;
}

QSeries QSeries::truncated(int new_order) const {
    return rewindowed(lo_, new_order);
}

QSeries QSeries::rewindowed(int new_lo, int new_order) const {
    if (new_order > order())
        throw SeriesError("cannot extend window upward past " + window_str(lo_, order()));
    QSeries r(new_lo, new_order);
    for (int e = lo_; e < new_lo; ++e)
        if (!coeff(e).is_zero())
            throw SeriesError("rewindow would drop a nonzero coefficient at q^" + std::to_string(e));
    for (int e = std::max(lo_, new_lo); e < new_order; ++e) r.mutable_coeff(e) = coeff(e);
    return r;
}

QSeries QSeries::operator-() const {
    QSeries r(lo_, order());
    for (int e = lo_; e < order(); ++e) r.mutable_coeff(e) = -coeff(e);
    return r;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    // Both operands are exactly zero below their lo, so the sum is sound
    // down to the smaller lo; knowledge still ends at the smaller order.
    int lo = std::min(a.lo(), b.lo());
    int order = std::min(a.order(), b.order());
    if (order <= lo) throw SeriesError("empty sum window " + window_str(lo, order));
    QSeries r(lo, order);
    for (int e = lo; e < order; ++e) r.mutable_coeff(e) = a.coeff(e) + b.coeff(e);
    return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    return a + (-b);
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    int lo = a.lo() + b.lo();
    int order = std::min(a.lo() + b.order(), b.lo() + a.order());
    if (order <= lo) throw SeriesError("empty product window " + window_str(lo, order));
    QSeries r(lo, order);
    for (int ea = a.lo(); ea < a.order(); ++ea) {
        const TLaurent& ca = a.coeff(ea);
        if (ca.is_zero()) continue;
        int eb_hi = std::min(b.order(), order - ea);
        for (int eb = b.lo(); eb < eb_hi; ++eb) {
            const TLaurent& cb = b.coeff(eb);
            if (cb.is_zero()) continue;
            r.mutable_coeff(ea + eb) += ca * cb;
        }
    }
    return r;
}

QSeries QSeries::mul_monomial(const Monomial& m) const {
    QSeries r(lo_ + m.q_exp, order() + m.q_exp);
    for (int e = lo_; e < order(); ++e) {
        const TLaurent& c = coeff(e);
        if (c.is_zero()) continue;
        r.mutable_coeff(e + m.q_exp) = c.shifted(m.t_exp) * m.coeff;
    }
    return r;
}

QSeries QSeries::mul_binomial_factor(const BigInt& c, int t_exp, int q_shift) const {
    // (1 + c t^e q^s) is an exact polynomial, so only negative s moves
    // the window: result coefficient at n is a_n + c t^e a_(n-s).
    int d = std::min(0, q_shift);
    QSeries r(lo_ + d, order() + d);
    for (int e = r.lo_; e < r.order(); ++e) {
        TLaurent v = e >= lo_ ? coeff(e) : TLaurent{};
        int src = e - q_shift;
        if (src >= lo_) {
            const TLaurent& f = coeff(src);
            if (!f.is_zero()) v += f.shifted(t_exp) * c;
        }
        r.mutable_coeff(e) = std::move(v);
    }
    return r;
}

QSeries QSeries::scaled(const BigInt& c) const {
    QSeries r(lo_, order());
    if (c == 0) return r;
    for (int e = lo_; e < order(); ++e) {
        TLaurent v = coeff(e);
        v *= c;
        r.mutable_coeff(e) = std::move(v);
    }
    return r;
}

QSeries QSeries::scaled(const TLaurent& f) const {
    QSeries r(lo_, order());
    if (f.is_zero()) return r;
    for (int e = lo_; e < order(); ++e) {
        const TLaurent& c = coeff(e);
        if (!c.is_zero()) r.mutable_coeff(e) = c * f;
    }
    return r;
}

QSeries QSeries::inverse() const {
    auto m_opt = lowest_nonzero();
    if (!m_opt) throw SeriesError("inverse of a series with no nonzero term in the window");
    int m = *m_opt;
    const TLaurent& lead = coeff(m);
    if (!lead.is_unit_monomial())
        throw SeriesError("inverse requires a unit monomial +-t^e leading term, got " + lead.str());
    int e0 = lead.min_exp();
    const BigInt& u = lead.coeff(e0); // +1 or -1

    // Write a = u t^e0 q^m (1 + s). With relative coefficients
    // R_k = a_(m+k) the inverse satisfies B_0 = u t^-e0 and
    // B_k = -u t^-e0 sum_{j=1..k} R_j B_(k-j), exact over the integers.
    int n_rel = order() - m; // relative coefficients known for 0..n_rel-1
    std::vector<TLaurent> b(static_cast<std::size_t>(n_rel));
    b[0] = TLaurent::term(u, -e0);
    for (int k = 1; k < n_rel; ++k) {
        TLaurent acc;
        for (int j = 1; j <= k; ++j) {
            const TLaurent& rj = coeff(m + j);
            if (rj.is_zero()) continue;
            acc += rj * b[static_cast<std::size_t>(k - j)];
        }
        if (!acc.is_zero()) b[static_cast<std::size_t>(k)] = (-acc).shifted(-e0) * u;
    }
    QSeries r(-m, n_rel - m); // window [-m, order - 2m)
    for (int k = 0; k < r.order() + m; ++k) r.mutable_coeff(-m + k) = std::move(b[static_cast<std::size_t>(k)]);
    return r;
}

QSeries QSeries::substituted_q(int k) const {
    if (k < 1) throw SeriesError("substitution exponent must be >= 1");
    QSeries r(lo_ * k, order() * k);
    for (int e = lo_; e < order(); ++e) {
        const TLaurent& c = coeff(e);
        if (!c.is_zero()) r.mutable_coeff(e * k) = c;
    }
    return r;
}

QSeries QSeries::at_t1() const {
    QSeries r(lo_, order());
    for (int e = lo_; e < order(); ++e) {
        BigInt v = coeff(e).at_t1();
        if (v != 0) r.mutable_coeff(e) = TLaurent::constant(std::move(v));
    }
    return r;
}

std::optional<Discrepancy> QSeries::first_diff(const QSeries& a, const QSeries& b) {
    int lo = std::min(a.lo(), b.lo());
    int order = std::min(a.order(), b.order());
    for (int e = lo; e < order; ++e) {
        const TLaurent& ca = a.coeff(e);
        const TLaurent& cb = b.coeff(e);
        if (ca == cb) continue;
        TLaurent d = ca - cb;
        int t = d.min_exp();
        return Discrepancy{e, t, ca.coeff(t), cb.coeff(t)};
    }
    return std::nullopt;
}

void QSeries::for_each_term(const std::function<void(int, int, const BigInt&)>& fn) const {
    for (int e = lo_; e < order(); ++e)
        for (const auto& [t, c] : coeff(e).terms()) fn(e, t, c);
}

std::string QSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for_each_term([&](int q, int t, const BigInt& c) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")";
        if (t != 0) os << " t^" << t;
        if (q != 0) os << " q^" << q;
    });
    if (first) os << "0 over " << window_str(lo_, order());
    return os.str();
}

QSeries pochhammer_finite(const Monomial& a, int modulus, int n, int order) {
    if (modulus < 1) throw std::invalid_argument("pochhammer modulus must be positive");
    if (n < 0) throw std::invalid_argument("pochhammer length must be nonnegative");
    QSeries r = QSeries::one(order);
    for (int j = 0; j < n; ++j) {
        int s = a.q_exp + modulus * j;
        if (s > 0 && s >= r.order() - r.lo()) continue; // factor is 1 on the window
        r = r.mul_binomial_factor(-a.coeff, a.t_exp, s);
    }
    return r;
}

QSeries pochhammer_infinite(const Monomial& a, int modulus, int order) {
    if (modulus < 1)
        throw SeriesError("infinite pochhammer needs a positive modulus so factors stabilize");
    QSeries r = QSeries::one(order);
    for (int j = 0;; ++j) {
        int s = a.q_exp + modulus * j;
        if (s > 0 && s >= r.order() - r.lo()) break; // all later factors are 1 on the window
        r = r.mul_binomial_factor(-a.coeff, a.t_exp, s);
    }
    return r;
}

namespace {

// Dense univariate polynomial with exact coefficients, index = q-exponent.
using UPoly = std::vector<BigInt>;

// p *= (1 - q^s), s >= 1.
void upoly_mul_factor(UPoly& p, int s) {
    UPoly r(p.size() + static_cast<std::size_t>(s));
    for (std::size_t i = 0; i < p.size(); ++i) {
        r[i] += p[i];
        r[i + static_cast<std::size_t>(s)] -= p[i];
    }
    p = std::move(r);
}

// (q^M; q^M)_n as a dense polynomial.
UPoly upoly_qfactorial(int n, int modulus) {
    UPoly p{BigInt(1)};
    for (int j = 1; j <= n; ++j) upoly_mul_factor(p, modulus * j);
    return p;
}

// Long division with remainder check; throws when the division is inexact.
UPoly upoly_divide_exact(UPoly num, const UPoly& den) {
    int dn = static_cast<int>(num.size()) - 1;
    int dd = static_cast<int>(den.size()) - 1;
    while (dd >= 0 && den[static_cast<std::size_t>(dd)] == 0) --dd;
    if (dd < 0) throw ArithmeticBug("division by zero polynomial");
    const BigInt& lead = den[static_cast<std::size_t>(dd)];
    if (lead != 1 && lead != -1) throw ArithmeticBug("expected a unit leading coefficient");
    if (dn < dd) throw ArithmeticBug("quotient degree would be negative");
    UPoly quot(static_cast<std::size_t>(dn - dd + 1));
    for (int i = dn - dd; i >= 0; --i) {
        BigInt c = num[static_cast<std::size_t>(i + dd)];
        if (c == 0) continue;
        c *= lead; // divide by +-1
        quot[static_cast<std::size_t>(i)] = c;
        for (int j = 0; j <= dd; ++j) num[static_cast<std::size_t>(i + j)] -= c * den[static_cast<std::size_t>(j)];
    }
    for (const BigInt& c : num)
        if (c != 0) throw ArithmeticBug("inexact polynomial division in qbinomial");
    return quot;
}

} // namespace

QSeries qbinomial(int n, int m, int modulus, int order) {
    if (modulus < 1) throw std::invalid_argument("qbinomial modulus must be positive");
    if (m < 0 || n < 0 || m > n) throw std::invalid_argument("qbinomial needs 0 <= m <= n");
    UPoly num = upoly_qfactorial(n, modulus);
    UPoly den = upoly_qfactorial(m, modulus);
    {
        UPoly den2 = upoly_qfactorial(n - m, modulus);
        UPoly prod(den.size() + den2.size() - 1);
        for (std::size_t i = 0; i < den.size(); ++i) {
            if (den[i] == 0) continue;
            for (std::size_t j = 0; j < den2.size(); ++j) prod[i + j] += den[i] * den2[j];
        }
        den = std::move(prod);
    }
    UPoly quot = upoly_divide_exact(std::move(num), den);
    QSeries r(0, order);
    for (std::size_t i = 0; i < quot.size() && static_cast<int>(i) < order; ++i)
        if (quot[i] != 0) r.add_term(static_cast<int>(i), 0, quot[i]);
    return r;
}

} // namespace qcap
