#pragma once

#include <map>
#include <string>

#include "qcap/bigint.hpp"

namespace qcap {

// Laurent polynomial in the refinement variable t with exact integer
// coefficients. t tracks the statistic nu_1 - nu_2 of a partition, so the
// support is sparse and roughly symmetric around 0; stored as a map from
// exponent to nonzero coefficient. Zero coefficients are never kept.
class TLaurent {
  public:
    TLaurent() = default;

    static TLaurent constant(BigInt c);
    static TLaurent term(BigInt coeff, int t_exp);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Coefficient of t^e; zero when absent.
    const BigInt& coeff(int t_exp) const;
    int min_exp() const; // requires a nonzero value
    int max_exp() const;

    bool is_constant() const;
    // Exactly one term, with coefficient +1 or -1.
    bool is_unit_monomial() const;

    void add_term(int t_exp, const BigInt& c);

    TLaurent& operator+=(const TLaurent& o);
    TLaurent& operator-=(const TLaurent& o);
    TLaurent operator-() const;
    TLaurent& operator*=(const BigInt& c);

    friend TLaurent operator+(TLaurent a, const TLaurent& b) { return a += b; }
    friend TLaurent operator-(TLaurent a, const TLaurent& b) { return a -= b; }
    friend TLaurent operator*(const TLaurent& a, const TLaurent& b);
    friend TLaurent operator*(TLaurent a, const BigInt& c) { return a *= c; }

    // Multiply by t^dt.
    TLaurent shifted(int dt) const;

    // Value at t = 1 (sum of coefficients).
    BigInt at_t1() const;

    bool operator==(const TLaurent& o) const = default;

    const std::map<int, BigInt>& terms() const { return terms_; }

    std::string str() const;

  private:
    std::map<int, BigInt> terms_;
};

} // namespace qcap
