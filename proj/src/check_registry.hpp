#pragma once

#include <string>
#include <vector>

#include "qcap/partitions.hpp"
#include "qcap/verifier.hpp"

namespace qcap::verify::detail {

// Thrown by comparison helpers on the first mismatch; run_check turns it
// into a fail result. Identity failure is data, never a crash.
struct FailSignal {
    Discrepancy disc;
    std::string what;
};

struct SkipSignal {
    std::string why;
};

class Ctx {
  public:
    Ctx(int order, int z_degree, std::optional<GapConfig> cfg, const FaultSpec* fault)
        : order(order), z_degree(z_degree), cfg_override(cfg), fault(fault) {}

    int order;
    int z_degree;
    std::optional<GapConfig> cfg_override;
    const FaultSpec* fault; // set when the active fault targets this check

    // The (alpha, beta) sweep: all four unless overridden.
    std::vector<GapConfig> configs() const;

    void equal(const std::string& what, const QSeries& lhs, const QSeries& rhs) const;
    void zero(const std::string& what, const QSeries& s) const;
    void equal_count(const std::string& what, int at, long long lhs, long long rhs) const;
    void require(const std::string& what, bool ok, const Discrepancy& d) const;
};

struct CheckDef {
    CheckInfo info;
    int default_order;
    bool needs_z = false; // residual checks require z_degree >= 3
    void (*run)(const Ctx&) = nullptr;
};

// Sorted by name.
const std::vector<CheckDef>& registry();

} // namespace qcap::verify::detail
