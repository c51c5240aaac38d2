#pragma once

#include <utility>

#include "qcap/qseries.hpp"

namespace qcap {

// Argument of a Jacobi theta function: theta(z; q^modulus) with z a unit
// monomial +-t^a q^b.
struct ThetaSpec {
    Monomial z;
    int modulus = 1;
};

// Bilateral sum  theta(z; q^M) = sum_{k in Z} z^k q^(M k(k-1)/2).
// The contributing k-range is solved explicitly from the quadratic
// exponent inequality, so negative k are handled exactly.
QSeries theta_sum(const ThetaSpec& spec, int order);

// Product form  (-z, -z^-1 q^M, q^M; q^M)_infty  of the same function.
QSeries theta_product(const ThetaSpec& spec, int order);

// Shifted character with period 3: chi3(m) = 1, -1, 0 for
// m = 0, 1, 2 (mod 3).
int chi3(long long m) noexcept;

enum class FalseThetaForm { character, split };

// False theta functions
//   FT1(t;q) = sum_{k>=0} chi3(k) t^(-k) q^(k(k+1)),
//   FT2(t;q) = sum_{k>=0} chi3(k) t^k q^(k^2);
// the split form expands the period-3 support of chi3 into two plain
// one-sided families, coded independently of the character form.
QSeries false_theta(int which, FalseThetaForm form, int order);

// Both sides of Euler's expansions at x = c t^e q^b (b >= 1), base q^M:
//   variant 1:  1/(x;q)_infty  vs  sum_n x^n / (q;q)_n
//   variant 2:  (x;q)_infty    vs  sum_n (-1)^n x^n q^(n(n-1)/2) / (q;q)_n
std::pair<QSeries, QSeries> euler_sides(int variant, const Monomial& x, int modulus, int order);

// The even-index Cauchy sum and its two product evaluations, base q^M:
//   sum_{n even} q^(n(n-1)/2)/(q;q)_n = 1/(q;q^2)_infty = (-q;q)_infty.
struct CauchyEvenSides {
    QSeries even_sum;
    QSeries inverse_product;
    QSeries neg_pochhammer;
};
CauchyEvenSides cauchy_even_sides(int modulus, int order);

// The Lost Notebook transformation at monomial a, b (base q^M):
//   sum_n q^n / ((-aq;q)_n (-bq;q)_n)
//     = (1 + a^-1) sum_n (-1)^n q^(n(n+1)/2) (b/a)^n / (-bq;q)_n
//       - a^-1 [sum_n (-1)^n q^(n(n+1)/2) (b/a)^n] / (-aq, -bq; q)_infty.
// |a.coeff| must be 1; the right side may carry temporarily negative
// q-exponents (window lo < 0), the left side lives at lo = 0.
std::pair<QSeries, QSeries> ramanujan_sides(const Monomial& a, const Monomial& b, int modulus,
                                            int order);

// Rogers' false theta transformation at unit monomial y (base q^M):
//   sum_n (-1)^n y^(2n) q^(n(n+1)/2) / (yq;q)_n
//     = sum_n (-1)^n y^(3n) q^(n(3n+1)/2) (1 - y^2 q^(2n+1)).
// Both sides may have genuinely negative q-support.
std::pair<QSeries, QSeries> rogers_sides(const Monomial& y, int modulus, int order);

} // namespace qcap
