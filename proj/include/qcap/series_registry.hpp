#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcap/qseries.hpp"

namespace qcap {

// Named series for the expand command and the python bindings.
//
// Fixed names: C1-refined, C2-refined, C2star-refined, C3-refined,
// Cab-refined (uses alpha/beta), Theta1, Theta2, theta-tq4, theta-tq,
// theta-neg-t2q2. Patterns: C<M>-finite, gamma<n>, delta<n>, F<n>, H<n>
// (F<n>/H<n> are the z-degree-n coefficients, i.e. gamma_n / delta_n).
class UnknownSeriesError : public std::invalid_argument {
  public:
    explicit UnknownSeriesError(const std::string& name);
    const std::string name;
};

QSeries expand_series(const std::string& name, int order, int alpha = 1, int beta = 1);

// Names and patterns for error messages and docs.
const std::vector<std::string>& series_name_hints();

} // namespace qcap
