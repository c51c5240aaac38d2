#include "qcap/zpoly.hpp"

namespace qcap {

ZPoly::ZPoly(int degree, int lo, int order) {
    if (degree < 0) throw SeriesError("negative z-degree");
    zcoeffs_.assign(static_cast<std::size_t>(degree + 1), QSeries(lo, order));
}

ZPoly::ZPoly(std::vector<QSeries> zcoeffs) : zcoeffs_(std::move(zcoeffs)) {
    if (zcoeffs_.empty()) throw SeriesError("ZPoly needs at least the z^0 coefficient");
    for (const QSeries& s : zcoeffs_)
        if (s.lo() != lo() || s.order() != order())
            throw SeriesError("ZPoly coefficients must share one q-window");
}

int ZPoly::lo() const {
    return zcoeffs_.front().lo();
}

int ZPoly::order() const {
    return zcoeffs_.front().order();
}

const QSeries& ZPoly::coeff(int z_deg) const {
    if (z_deg < 0 || z_deg > degree()) throw SeriesError("z-degree out of range");
    return zcoeffs_[static_cast<std::size_t>(z_deg)];
}

void ZPoly::set_coeff(int z_deg, QSeries s) {
    if (z_deg < 0 || z_deg > degree()) throw SeriesError("z-degree out of range");
    zcoeffs_[static_cast<std::size_t>(z_deg)] = s.rewindowed(lo(), order());
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
    if (o.degree() != degree()) throw SeriesError("z-degree mismatch");
    for (int d = 0; d <= degree(); ++d) set_coeff(d, coeff(d) + o.coeff(d));
    return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
    if (o.degree() != degree()) throw SeriesError("z-degree mismatch");
    for (int d = 0; d <= degree(); ++d) set_coeff(d, coeff(d) - o.coeff(d));
    return *this;
}

ZPoly ZPoly::scaled_z(int m) const {
    if (m < 0) throw SeriesError("scaled_z needs a nonnegative exponent");
    ZPoly r(degree(), lo(), order());
    for (int d = 0; d <= degree(); ++d) {
        long long shift = static_cast<long long>(m) * d;
        if (shift >= order()) continue; // whole coefficient leaves the window
        r.set_coeff(d, coeff(d).mul_monomial(Monomial::make(1, 0, static_cast<int>(shift)))
                           .rewindowed(lo(), order()));
    }
    return r;
}

ZPoly ZPoly::shifted_z(int k) const {
    ZPoly r(degree(), lo(), order());
    for (int d = 0; d + k <= degree(); ++d)
        if (d + k >= 0) r.set_coeff(d + k, coeff(d));
    return r;
}

ZPoly ZPoly::scaled_monomial(const Monomial& m) const {
    ZPoly r(degree(), lo(), order());
    for (int d = 0; d <= degree(); ++d)
        r.set_coeff(d, coeff(d).mul_monomial(m).rewindowed(lo(), order()));
    return r;
}

ZPoly ZPoly::multiplied(const ZPoly& o, int max_degree) const {
    if (max_degree < 0) max_degree = degree();
    ZPoly r(max_degree, lo(), order());
    for (int da = 0; da <= degree() && da <= max_degree; ++da) {
        if (coeff(da).is_zero()) continue;
        for (int db = 0; db <= o.degree() && da + db <= max_degree; ++db) {
            if (o.coeff(db).is_zero()) continue;
            r.set_coeff(da + db, r.coeff(da + db) + coeff(da) * o.coeff(db));
        }
    }
    return r;
}

} // namespace qcap
