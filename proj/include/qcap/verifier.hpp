#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcap/qseries.hpp"

namespace qcap::verify {

enum class Status { pass, fail, skipped };

const char* status_name(Status s);

// Outcome of one named identity check. A fail always carries the first
// discrepant coefficient in (q_exp, t_exp) order.
struct CheckResult {
    std::string name;
    std::map<std::string, std::string> params;
    Status status = Status::pass;
    std::optional<Discrepancy> discrepancy;
    std::string note; // failing comparison label or skip reason
    double elapsed_ms = 0.0;
};

struct Summary {
    int total = 0, passed = 0, failed = 0, skipped = 0;
};

struct Report {
    std::vector<CheckResult> checks; // ordered by registry name
    Summary summary;
    std::string engine_version;
    std::map<std::string, std::string> config; // effective global config echo
};

// Test hook: adds +1 to the left side of every series/count comparison of
// the named check at coefficient (q_exp, t_exp), to exercise failure
// detection and localization.
struct FaultSpec {
    std::string check;
    int q_exp = 0;
    int t_exp = 0;
};

struct RunConfig {
    std::optional<int> q_order;
    std::optional<int> z_degree;
    std::optional<int> alpha; // restrict cfg sweeps to one (alpha, beta)
    std::optional<int> beta;
    int threads = 0; // 0 = hardware default (bounded)
    std::optional<FaultSpec> fault;
};

struct CheckInfo {
    std::string name;
    std::string label;       // one-line statement of the identity
    std::string description;
    std::vector<std::string> covers; // identity keys (see required_identity_keys)
};

// All registered checks, ordered by name.
const std::vector<CheckInfo>& check_catalog();

// Static list of identity keys that the registry must cover; the
// coverage meta-test asserts catalog covers == this set.
const std::vector<std::string>& required_identity_keys();

class UnknownCheckError : public std::invalid_argument {
  public:
    explicit UnknownCheckError(const std::string& name);
    const std::string name;
};

// Runs one check at its defaults merged with the config. Identity
// failures are reported in the result, never thrown.
CheckResult run_check(const std::string& name, const RunConfig& config = {});

// Runs every registered check (independent checks execute on a bounded
// worker pool) and assembles a deterministic report.
Report run_all(const RunConfig& config = {});

} // namespace qcap::verify
