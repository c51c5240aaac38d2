#pragma once

namespace qcap {

inline constexpr const char* kEngineName = "qcap";
inline constexpr const char* kEngineVersion = "1.0.0";
inline constexpr const char* kReportSchemaVersion = "1";

} // namespace qcap
