#pragma once

#include <iosfwd>

namespace qcap {

// Command-line front end (verify / expand / list). Returns the process
// exit code: 0 all checks passed, 1 at least one identity failed,
// 2 usage or configuration error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace qcap
