#include "qcap/report_json.hpp"

#include <sstream>

#include "json.hpp"
#include "qcap/version.hpp"

namespace qcap::verify {

using nlohmann::json;

namespace {

json discrepancy_to_json(const Discrepancy& d) {
    return json{{"q_exp", d.q_exp},
                {"t_exp", d.t_exp},
                {"lhs", d.lhs.str()},
                {"rhs", d.rhs.str()}};
}

Status status_from_name(const std::string& s) {
    if (s == "pass") return Status::pass;
    if (s == "fail") return Status::fail;
    if (s == "skipped") return Status::skipped;
    throw std::invalid_argument("unknown status: " + s);
}

} // namespace

std::string report_to_json(const Report& report, int indent) {
    json checks = json::array();
    for (const CheckResult& r : report.checks) {
        json c{{"name", r.name},
               {"status", status_name(r.status)},
               {"params", r.params},
               {"elapsed_ms", r.elapsed_ms}};
        if (!r.note.empty()) c["note"] = r.note;
        if (r.discrepancy) c["discrepancy"] = discrepancy_to_json(*r.discrepancy);
        checks.push_back(std::move(c));
    }
    json doc{{"schema_version", kReportSchemaVersion},
             {"engine", report.engine_version},
             {"config", report.config},
             {"summary",
              {{"total", report.summary.total},
               {"passed", report.summary.passed},
               {"failed", report.summary.failed},
               {"skipped", report.summary.skipped}}},
             {"checks", checks}};
    return doc.dump(indent);
}

Report report_from_json(const std::string& text) {
    json doc = json::parse(text);
    if (doc.at("schema_version").get<std::string>() != kReportSchemaVersion)
        throw std::invalid_argument("unsupported report schema_version");
    Report report;
    report.engine_version = doc.at("engine").get<std::string>();
    for (const auto& [k, v] : doc.at("config").items())
        report.config[k] = v.get<std::string>();
    const json& s = doc.at("summary");
    report.summary = {s.at("total").get<int>(), s.at("passed").get<int>(),
                      s.at("failed").get<int>(), s.at("skipped").get<int>()};
    for (const json& c : doc.at("checks")) {
        CheckResult r;
        r.name = c.at("name").get<std::string>();
        r.status = status_from_name(c.at("status").get<std::string>());
        for (const auto& [k, v] : c.at("params").items()) r.params[k] = v.get<std::string>();
        r.elapsed_ms = c.at("elapsed_ms").get<double>();
        if (c.contains("note")) r.note = c.at("note").get<std::string>();
        if (c.contains("discrepancy")) {
            const json& d = c.at("discrepancy");
            Discrepancy disc;
            disc.q_exp = d.at("q_exp").get<int>();
            disc.t_exp = d.at("t_exp").get<int>();
            disc.lhs = BigInt(d.at("lhs").get<std::string>());
            disc.rhs = BigInt(d.at("rhs").get<std::string>());
            r.discrepancy = std::move(disc);
        }
        report.checks.push_back(std::move(r));
    }
    return report;
}

} // namespace qcap::verify
