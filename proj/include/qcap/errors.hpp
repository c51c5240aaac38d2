#pragma once

#include <stdexcept>
#include <string>

namespace qcap {

// Violation of a truncation-window or unit-leading-term precondition.
class SeriesError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Exactness violation that can only arise from an internal bug, e.g. a
// nonzero remainder in a division whose quotient is provably a polynomial.
class ArithmeticBug : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

} // namespace qcap
