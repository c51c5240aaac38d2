#pragma once

#include <utility>
#include <vector>

#include "qcap/partitions.hpp"
#include "qcap/zpoly.hpp"

namespace qcap {

// C_M(t;q): the generating function of level-3 gap partitions with parts
// <= M under the (alpha, beta) indicator weights, built bottom-up from
// the listed initial values C_1..C_4, C_0 = 1 and the extension value
// C_{-2} = beta via the three-line recurrence system
//   C_{3n-1} = C_{3n-2} + t^-1 q^(3n-1) C_{3n-5}
//   C_{3n}   = C_{3n-1} + q^(3n) C_{3n-3}
//   C_{3n+1} = C_{3n} + t q^(3n+1) C_{3n-3} + q^(6n) C_{3n-5}   (n >= 2).
// Valid M: -2 (extension value) or M >= 0; M = -1 is not defined.
QSeries finite_C(const GapConfig& cfg, int M, int order);

// All of C_{-2}, C_0 .. C_{M_max} in one bottom-up pass.
class FiniteCTable {
  public:
    FiniteCTable(const GapConfig& cfg, int m_max, int order);
    const QSeries& at(int M) const; // M = -2 or 0..m_max
    int m_max() const { return m_max_; }

  private:
    int m_max_;
    QSeries c_minus2_;
    std::vector<QSeries> c_; // index M
};

// The single combined recurrence
//   C_{3n+1} = (1+q^(3n)) C_{3n-2}
//            + (t^-1 q^(3n-1) + t q^(3n+1) + q^(6n)) C_{3n-5}
//            + q^(6n-3) (1 - q^(3n-3)) C_{3n-8}      (n >= 2),
// evaluated on finite_C values; nullopt when it holds.
std::optional<Discrepancy> combined_recurrence_diff(const GapConfig& cfg, int n, int order);
bool combined_recurrence_holds(const GapConfig& cfg, int n, int order);

// gamma_n = C_{3n-2} / (q^3;q^3)_n, from the initial values
// gamma_0 = beta, gamma_1 = (1 + alpha t q)/(1-q^3), gamma_2 = C_4/(...)_2
// and the three-term recurrence; divisions go through exact unit-leading
// inverses.
std::vector<QSeries> gamma_seq(const GapConfig& cfg, int n_max, int order);

// delta_n: coefficients of H(z) = F(z)/(-z;q^3)_infty, from delta_0 = beta,
// delta_1 = (1 + alpha t q - beta)/(1-q^3) and the two-step recurrence
// with the (1-alpha-beta) inhomogeneous term.
std::vector<QSeries> delta_seq(const GapConfig& cfg, int n_max, int order);

// Closed forms for the same coefficients, indexed by sequence position k:
// even k = 2n uses the (-t^-1 q^2, -t q^4; q^6)_n form, odd k = 2n+1 the
// (-t^-1 q^5, -t q^7; q^6)_n form, each with its finite ell-sum.
QSeries delta_closed(const GapConfig& cfg, int k, int order);

// F(z) = sum gamma_n z^n and H(z) = sum delta_n z^n to z-degree D.
std::pair<ZPoly, ZPoly> build_F_H(const GapConfig& cfg, int z_degree, int order);

// (-z; q^3)_infty as a ZPoly to the given z-degree (used to cross-check
// F = (-z;q^3)_infty * H).
ZPoly neg_z_pochhammer(int z_degree, int order);

enum class QDiffEquation { F, H };

// Left side minus right side of the q-difference equation satisfied by
// F(z) or H(z), with the whole equation scaled by q^3 so every series
// lives in a lo = 0 window. Truncation feeds z-degrees from below only,
// so the residual is meaningful for z-degrees 0..D-2.
ZPoly qdiff_residual(QDiffEquation eq, const GapConfig& cfg, int z_degree, int order);

// Direct evaluation of the closed finite double-sum formula for
// C_{3n-2}(t;q): q-binomials at base q^3, finite Pochhammer factors at
// base q^6, and exact inner ell-sums.
QSeries lemma_eval(const GapConfig& cfg, int n, int order);

// The two infinite-product limits of the finite evaluation and their
// transformed forms, plus the assembled right side of the main
// evaluation. Intermediate sums are exposed so each transformation step
// can be asserted separately.
struct LimitChain {
    QSeries c0_raw;       // product form with the direct ell-sum
    QSeries c0_final;     // transformed form (alternating sum + split false theta)
    QSeries c1_raw;
    QSeries c1_final;
    QSeries theorem_rhs;  // theta / false-theta evaluation of C^(alpha,beta)

    QSeries s0_direct;         // sum_{l>=1} q^(6l-2)/(-t^-1 q^2, -t q^4; q^6)_l
    QSeries s0_transformed;    // its Lost-Notebook transform
    QSeries rog0_lhs, rog0_rhs; // Rogers step inside the s0 transform
    QSeries s1_direct;         // sum_{l>=1} q^(6l+1)/(-t^-1 q^5, -t q^7; q^6)_l
    QSeries s1_transformed;
    QSeries rog1_lhs, rog1_rhs;
    QSeries fold_lhs, fold_rhs; // 1-beta = alpha + (1-alpha-beta) fold into FT2
};
LimitChain limit_chain(const GapConfig& cfg, int order);

} // namespace qcap
