#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qcap/partitions.hpp"
#include "qcap/qdiff.hpp"
#include "qcap/report_json.hpp"
#include "qcap/series_registry.hpp"
#include "qcap/theta.hpp"
#include "qcap/verifier.hpp"
#include "qcap/version.hpp"

namespace py = pybind11;
using namespace qcap;

namespace {

py::int_ to_pyint(const BigInt& v) {
    // Route through the decimal string so arbitrary precision survives.
    return py::cast<py::int_>(py::module_::import("builtins").attr("int")(v.str()));
}

py::dict result_to_dict(const verify::CheckResult& r) {
    py::dict d;
    d["name"] = r.name;
    d["status"] = verify::status_name(r.status);
    d["params"] = r.params;
    d["elapsed_ms"] = r.elapsed_ms;
    if (!r.note.empty()) d["note"] = r.note;
    if (r.discrepancy) {
        py::dict disc;
        disc["q_exp"] = r.discrepancy->q_exp;
        disc["t_exp"] = r.discrepancy->t_exp;
        disc["lhs"] = to_pyint(r.discrepancy->lhs);
        disc["rhs"] = to_pyint(r.discrepancy->rhs);
        d["discrepancy"] = disc;
    }
    return d;
}

verify::RunConfig make_config(std::optional<int> order, std::optional<int> z_degree,
                              std::optional<int> alpha, std::optional<int> beta, int threads) {
    verify::RunConfig config;
    config.q_order = order;
    config.z_degree = z_degree;
    config.alpha = alpha;
    config.beta = beta;
    config.threads = threads;
    return config;
}

} // namespace

PYBIND11_MODULE(_qcap, m) {
    m.doc() = "exact q-series verification engine for the Capparelli identities";
    m.attr("__version__") = kEngineVersion;

    m.def(
        "run_check",
        [](const std::string& name, std::optional<int> order, std::optional<int> z_degree,
           std::optional<int> alpha, std::optional<int> beta) {
            return result_to_dict(
                verify::run_check(name, make_config(order, z_degree, alpha, beta, 0)));
        },
        py::arg("name"), py::arg("order") = py::none(), py::arg("z_degree") = py::none(),
        py::arg("alpha") = py::none(), py::arg("beta") = py::none(),
        "Run one named identity check; identity failures are returned, not raised.");

    m.def(
        "run_all",
        [](std::optional<int> order, std::optional<int> z_degree, std::optional<int> alpha,
           std::optional<int> beta, int threads) {
            verify::Report report =
                verify::run_all(make_config(order, z_degree, alpha, beta, threads));
            py::dict d;
            d["engine"] = report.engine_version;
            d["config"] = report.config;
            py::dict summary;
            summary["total"] = report.summary.total;
            summary["passed"] = report.summary.passed;
            summary["failed"] = report.summary.failed;
            summary["skipped"] = report.summary.skipped;
            d["summary"] = summary;
            py::list checks;
            for (const auto& r : report.checks) checks.append(result_to_dict(r));
            d["checks"] = checks;
            return d;
        },
        py::arg("order") = py::none(), py::arg("z_degree") = py::none(),
        py::arg("alpha") = py::none(), py::arg("beta") = py::none(), py::arg("threads") = 0,
        "Run every registered check and return the report as a dict.");

    m.def("list_checks", [] {
        py::list out;
        for (const auto& info : verify::check_catalog()) {
            py::dict d;
            d["name"] = info.name;
            d["label"] = info.label;
            d["description"] = info.description;
            d["covers"] = info.covers;
            out.append(d);
        }
        return out;
    });

    m.def(
        "expand",
        [](const std::string& series, int order, int alpha, int beta) {
            QSeries s = expand_series(series, order, alpha, beta);
            py::list terms;
            s.for_each_term([&](int q, int t, const BigInt& c) {
                terms.append(py::make_tuple(q, t, to_pyint(c)));
            });
            py::dict d;
            d["series"] = series;
            d["lo"] = s.lo();
            d["order"] = s.order();
            d["terms"] = terms;
            return d;
        },
        py::arg("series"), py::arg("order") = 50, py::arg("alpha") = 1, py::arg("beta") = 1,
        "Expand a named series; terms are (q_exp, t_exp, coefficient) ascending.");

    m.def("count_cm", &count_cm, py::arg("m"), py::arg("n"),
          "Level-3 gap partitions of n with all parts >= m.");
    m.def("count_c2star", &count_c2star, py::arg("n"),
          "Level-3 gap partitions of n without 2 as a part.");
    m.def("count_dj", &count_dj, py::arg("j"), py::arg("n"),
          "Partitions of n into distinct parts avoiding +-j mod 6.");
    m.def("chi3", &chi3, py::arg("m"), "Period-3 shifted character: 1, -1, 0.");
}
