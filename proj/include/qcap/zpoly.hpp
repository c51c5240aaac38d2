#pragma once

#include <vector>

#include "qcap/qseries.hpp"

namespace qcap {

// Polynomial in the auxiliary variable z with QSeries coefficients,
// indexed by z-degree 0..degree(). All coefficients share one q-window.
class ZPoly {
  public:
    // Zero polynomial of the given z-degree on q-window [lo, order).
    ZPoly(int degree, int lo, int order);
    explicit ZPoly(std::vector<QSeries> zcoeffs);

    int degree() const { return static_cast<int>(zcoeffs_.size()) - 1; }
    int lo() const;
    int order() const;

    const QSeries& coeff(int z_deg) const;
    void set_coeff(int z_deg, QSeries s); // rewindowed to the shared window

    ZPoly& operator+=(const ZPoly& o);
    ZPoly& operator-=(const ZPoly& o);
    friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
    friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }

    // z -> z q^m: the z-degree-n coefficient picks up q^(m*n). Requires a
    // lo = 0 window so shifted coefficients re-fit it exactly.
    ZPoly scaled_z(int m) const;

    // Multiply by z^k; degrees above degree() fall off.
    ZPoly shifted_z(int k) const;

    // Multiply every coefficient by an exact monomial, re-fitting the
    // shared window (legal for m.q_exp >= 0 on lo = 0 windows).
    ZPoly scaled_monomial(const Monomial& m) const;

    // Product truncated to max_degree (defaults to this->degree()).
    ZPoly multiplied(const ZPoly& o, int max_degree = -1) const;

  private:
    std::vector<QSeries> zcoeffs_;
};

} // namespace qcap
