#pragma once

#include <string>

#include "qcap/verifier.hpp"

namespace qcap::verify {

// JSON serialization of a report. Big-integer coefficients are emitted
// as decimal strings; the schema carries a versioned schema_version
// field (see README for the layout).
std::string report_to_json(const Report& report, int indent = 2);

// Inverse of report_to_json (timing fields included).
Report report_from_json(const std::string& text);

} // namespace qcap::verify
