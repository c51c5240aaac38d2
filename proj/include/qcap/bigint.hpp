#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qcap {

// Exact integer coefficient type. q-binomial coefficients and theta
// products overflow 64-bit machine words well below the truncation
// orders used here, so coefficients are arbitrary precision throughout.
using BigInt = boost::multiprecision::cpp_int;

} // namespace qcap
