#include "qcap/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcap/report_json.hpp"
#include "qcap/series_registry.hpp"
#include "qcap/verifier.hpp"
#include "qcap/version.hpp"

namespace qcap {

namespace {

using nlohmann::json;

// Writes to --output when given, stdout otherwise.
bool deliver(const std::string& text, const std::string& output, std::ostream& out,
             std::ostream& err) {
    if (output.empty() || output == "-") {
        out << text;
        if (!text.empty() && text.back() != '\n') out << '\n';
        return true;
    }
    std::ofstream f(output);
    if (!f) {
        err << "cannot open output file: " << output << "\n";
        return false;
    }
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
    return true;
}

std::string term_text(int q, int t, const BigInt& c) {
    std::ostringstream os;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    bool has_var = (t != 0) || (q != 0);
    if (c < 0) os << "-";
    if (mag != 1 || !has_var) {
        os << mag;
        if (has_var) os << " ";
    }
    if (t != 0) {
        os << "t";
        if (t != 1) os << "^" << t;
        if (q != 0) os << " ";
    }
    if (q != 0) {
        os << "q";
        if (q != 1) os << "^" << q;
    }
    return os.str();
}

std::string render_series_text(const QSeries& s) {
    std::ostringstream os;
    bool any = false;
    s.for_each_term([&](int q, int t, const BigInt& c) {
        os << term_text(q, t, c) << "\n";
        any = true;
    });
    if (!any) os << "0\n";
    return os.str();
}

// Outer index is the q-exponent (offset by lo); inner entries are
// [t_exp, coefficient-as-decimal-string].
std::string render_series_json(const QSeries& s, const std::string& name, int alpha, int beta) {
    json coeffs = json::array();
    for (int e = s.lo(); e < s.order(); ++e) {
        json row = json::array();
        for (const auto& [t, c] : s.coeff(e).terms()) row.push_back(json::array({t, c.str()}));
        coeffs.push_back(std::move(row));
    }
    json doc{{"schema_version", kReportSchemaVersion},
             {"series", name},
             {"params", {{"alpha", alpha}, {"beta", beta}}},
             {"lo", s.lo()},
             {"order", s.order()},
             {"coeffs", coeffs}};
    return doc.dump(2);
}

std::string render_report_text(const verify::Report& report) {
    std::ostringstream os;
    for (const auto& r : report.checks) {
        os << "[" << (r.status == verify::Status::pass
                          ? "PASS"
                          : (r.status == verify::Status::fail ? "FAIL" : "SKIP"))
           << "] " << r.name;
        os << " (" << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms)";
        if (!r.note.empty() && r.status != verify::Status::pass) os << " -- " << r.note;
        if (r.discrepancy)
            os << " at q^" << r.discrepancy->q_exp << " t^" << r.discrepancy->t_exp << ": lhs "
               << r.discrepancy->lhs << " vs rhs " << r.discrepancy->rhs;
        os << "\n";
    }
    os << report.summary.passed << " passed, " << report.summary.failed << " failed, "
       << report.summary.skipped << " skipped (of " << report.summary.total << ")\n";
    return os.str();
}

int cmd_verify(const std::string& identity, const verify::RunConfig& config,
               const std::string& format, const std::string& output, std::ostream& out,
               std::ostream& err) {
    verify::Report report;
    if (identity == "all") {
        report = verify::run_all(config);
    } else {
        try {
            report.checks.push_back(verify::run_check(identity, config));
        } catch (const verify::UnknownCheckError&) {
            err << "unknown identity: " << identity << "\nvalid names:\n";
            for (const auto& info : verify::check_catalog()) err << "  " << info.name << "\n";
            return 2;
        }
        report.engine_version = std::string(kEngineName) + " " + kEngineVersion;
        report.config["q_order"] =
            config.q_order ? std::to_string(*config.q_order) : std::string("default");
        report.summary.total = 1;
        switch (report.checks.front().status) {
            case verify::Status::pass: report.summary.passed = 1; break;
            case verify::Status::fail: report.summary.failed = 1; break;
            case verify::Status::skipped: report.summary.skipped = 1; break;
        }
    }
    std::string text =
        format == "json" ? verify::report_to_json(report) : render_report_text(report);
    if (!deliver(text, output, out, err)) return 2;
    return report.summary.failed == 0 ? 0 : 1;
}

int cmd_expand(const std::string& series, int q_order, int alpha, int beta,
               const std::string& format, const std::string& output, std::ostream& out,
               std::ostream& err) {
    QSeries s = [&] {
        try {
            return expand_series(series, q_order, alpha, beta);
        } catch (const UnknownSeriesError&) {
            err << "unknown series: " << series << "\nvalid names:\n";
            for (const auto& hint : series_name_hints()) err << "  " << hint << "\n";
            throw;
        }
    }();
    std::string text = format == "json" ? render_series_json(s, series, alpha, beta)
                                        : render_series_text(s);
    return deliver(text, output, out, err) ? 0 : 2;
}

int cmd_list(const std::string& format, const std::string& output, std::ostream& out,
             std::ostream& err) {
    std::string text;
    if (format == "json") {
        json arr = json::array();
        for (const auto& info : verify::check_catalog())
            arr.push_back(json{{"name", info.name},
                               {"label", info.label},
                               {"description", info.description},
                               {"covers", info.covers}});
        text = arr.dump(2);
    } else {
        std::ostringstream os;
        for (const auto& info : verify::check_catalog()) {
            os << info.name << " -- " << info.label << "\n";
            os << "    " << info.description << "\n";
        }
        text = os.str();
    }
    return deliver(text, output, out, err) ? 0 : 2;
}

} // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact q-series verification engine for the Capparelli identities"};
    app.require_subcommand(1);

    std::string identity = "all";
    std::string series;
    std::string format = "text";
    std::string output;
    int q_order = 50;
    int z_degree = 8;
    int alpha = -1, beta = -1;
    int threads = 0;

    auto add_common = [&](CLI::App* cmd, bool with_series_params) {
        cmd->add_option("--q-order", q_order, "exclusive truncation order in q")
            ->envname("QCAP_DEFAULT_ORDER")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--format", format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--output", output, "output path (default stdout)");
        if (with_series_params) {
            cmd->add_option("--alpha", alpha, "part-1 indicator (0 or 1)")
                ->check(CLI::Range(0, 1));
            cmd->add_option("--beta", beta, "part-2 indicator (0 or 1)")
                ->check(CLI::Range(0, 1));
        }
    };

    CLI::App* verify_cmd = app.add_subcommand("verify", "run identity checks");
    verify_cmd->add_option("--identity", identity, "check name or 'all'");
    verify_cmd->add_option("--z-degree", z_degree, "z-truncation degree for residual checks")
        ->check(CLI::Range(3, 64));
    verify_cmd->add_option("--threads", threads, "worker threads (0 = auto)")
        ->check(CLI::NonNegativeNumber);
    // test hook: flip one coefficient of the named check's left side,
    // format <check>:<q_exp>:<t_exp>
    std::string inject_fault;
    verify_cmd->add_option("--inject-fault", inject_fault)->group("");
    add_common(verify_cmd, true);

    CLI::App* expand_cmd = app.add_subcommand("expand", "expand a named series");
    expand_cmd->add_option("--series", series, "series name")->required();
    add_common(expand_cmd, true);

    CLI::App* list_cmd = app.add_subcommand("list", "list registered checks");
    list_cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    list_cmd->add_option("--output", output, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err); // help exits 0
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }
    const bool verify_default_order = verify_cmd->count("--q-order") == 0 &&
                                      std::getenv("QCAP_DEFAULT_ORDER") == nullptr;

    try {
        if (app.got_subcommand(verify_cmd)) {
            verify::RunConfig config;
            if (!verify_default_order) config.q_order = q_order;
            if (verify_cmd->count("--z-degree")) config.z_degree = z_degree;
            if (alpha >= 0) config.alpha = alpha;
            if (beta >= 0) config.beta = beta;
            config.threads = threads;
            if (!inject_fault.empty()) {
                auto c1 = inject_fault.find(':');
                auto c2 = inject_fault.find(':', c1 + 1);
                if (c1 == std::string::npos || c2 == std::string::npos) {
                    err << "--inject-fault expects <check>:<q_exp>:<t_exp>\n";
                    return 2;
                }
                verify::FaultSpec fault;
                fault.check = inject_fault.substr(0, c1);
                fault.q_exp = std::stoi(inject_fault.substr(c1 + 1, c2 - c1 - 1));
                fault.t_exp = std::stoi(inject_fault.substr(c2 + 1));
                config.fault = fault;
            }
            return cmd_verify(identity, config, format, output, out, err);
        }
        if (app.got_subcommand(expand_cmd)) {
            int a = alpha >= 0 ? alpha : 1;
            int b = beta >= 0 ? beta : 1;
            return cmd_expand(series, q_order, a, b, format, output, out, err);
        }
        return cmd_list(format, output, out, err);
    } catch (const UnknownSeriesError&) {
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace qcap
