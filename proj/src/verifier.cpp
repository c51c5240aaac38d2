#include "qcap/verifier.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include "check_registry.hpp"
#include "qcap/version.hpp"

namespace qcap::verify {

using detail::CheckDef;
using detail::Ctx;
using detail::FailSignal;
using detail::SkipSignal;

const char* status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        default: return "skipped";
    }
}

UnknownCheckError::UnknownCheckError(const std::string& name)
    : std::invalid_argument("unknown check: " + name), name(name) {}

namespace detail {

std::vector<GapConfig> Ctx::configs() const {
    if (cfg_override) return {*cfg_override};
    return {kConfigC1, kConfigC2, kConfigC2Star, kConfigC3};
}

namespace {
QSeries with_fault(const QSeries& lhs, const FaultSpec* fault) {
    if (!fault || fault->q_exp < lhs.lo() || fault->q_exp >= lhs.order()) return lhs;
    QSeries p = lhs;
    p.add_term(fault->q_exp, fault->t_exp, 1);
    return p;
}
} // namespace

void Ctx::equal(const std::string& what, const QSeries& lhs, const QSeries& rhs) const {
    auto diff = QSeries::first_diff(with_fault(lhs, fault), rhs);
    if (diff) throw FailSignal{*diff, what};
}

void Ctx::zero(const std::string& what, const QSeries& s) const {
    equal(what, s, QSeries(s.lo(), s.order()));
}

void Ctx::equal_count(const std::string& what, int at, long long lhs, long long rhs) const {
    if (fault && fault->q_exp == at && fault->t_exp == 0) ++lhs;
    if (lhs != rhs) throw FailSignal{Discrepancy{at, 0, BigInt(lhs), BigInt(rhs)}, what};
}

void Ctx::require(const std::string& what, bool ok, const Discrepancy& d) const {
    if (!ok) throw FailSignal{d, what};
}

} // namespace detail

namespace {

const CheckDef* find_check(const std::string& name) {
    for (const CheckDef& def : detail::registry())
        if (def.info.name == name) return &def;
    return nullptr;
}

CheckResult run_def(const CheckDef& def, const RunConfig& config) {
    CheckResult result;
    result.name = def.info.name;

    const int order = config.q_order.value_or(def.default_order);
    const int z_degree = config.z_degree.value_or(8);
    std::optional<GapConfig> cfg;
    if (config.alpha || config.beta)
        cfg = GapConfig{config.alpha.value_or(1), config.beta.value_or(1)};

    result.params["order"] = std::to_string(order);
    if (def.needs_z) result.params["z_degree"] = std::to_string(z_degree);
    if (cfg) {
        result.params["alpha"] = std::to_string(cfg->alpha);
        result.params["beta"] = std::to_string(cfg->beta);
    }

    const FaultSpec* fault = nullptr;
    if (config.fault && config.fault->check == def.info.name) fault = &*config.fault;

    auto start = std::chrono::steady_clock::now();
    if (order < 1) {
        result.status = Status::skipped;
        result.note = "degenerate window (order < 1)";
    } else if (def.needs_z && z_degree < 3) {
        result.status = Status::skipped;
        result.note = "z_degree < 3";
    } else {
        try {
            Ctx ctx(order, z_degree, cfg, fault);
            def.run(ctx);
            result.status = Status::pass;
        } catch (const FailSignal& f) {
            result.status = Status::fail;
            result.discrepancy = f.disc;
            result.note = f.what;
        } catch (const SkipSignal& s) {
            result.status = Status::skipped;
            result.note = s.why;
        } catch (const SeriesError& e) {
            // parameters too degenerate to even form the objects (for
            // example the limit chain needs a window of at least 4)
            result.status = Status::skipped;
            result.note = std::string("degenerate parameters: ") + e.what();
        } catch (const std::exception& e) {
            // keep run_all alive; a skip with a note is visible in every
            // report while a crashed worker would take the process down
            result.status = Status::skipped;
            result.note = std::string("internal error: ") + e.what();
        }
    }
    auto stop = std::chrono::steady_clock::now();
    result.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return result;
}

} // namespace

const std::vector<CheckInfo>& check_catalog() {
    static const std::vector<CheckInfo> catalog = [] {
        std::vector<CheckInfo> infos;
        for (const CheckDef& def : detail::registry()) infos.push_back(def.info);
        return infos;
    }();
    return catalog;
}

CheckResult run_check(const std::string& name, const RunConfig& config) {
    const CheckDef* def = find_check(name);
    if (!def) throw UnknownCheckError(name);
    return run_def(*def, config);
}

Report run_all(const RunConfig& config) {
    const auto& reg = detail::registry();
    Report report;
    report.engine_version = std::string(kEngineName) + " " + kEngineVersion;
    report.config["q_order"] = config.q_order ? std::to_string(*config.q_order) : "default";
    report.config["z_degree"] = config.z_degree ? std::to_string(*config.z_degree) : "default";
    if (config.alpha) report.config["alpha"] = std::to_string(*config.alpha);
    if (config.beta) report.config["beta"] = std::to_string(*config.beta);
    if (config.fault)
        report.config["fault"] = config.fault->check + "@q^" + std::to_string(config.fault->q_exp) +
                                 ",t^" + std::to_string(config.fault->t_exp);

    unsigned n_threads = config.threads > 0 ? static_cast<unsigned>(config.threads)
                                            : std::min(8u, std::max(1u, std::thread::hardware_concurrency()));
    n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(reg.size()));
    report.config["threads"] = std::to_string(n_threads);

    std::vector<CheckResult> results(reg.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= reg.size()) return;
            results[i] = run_def(reg[i], config);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < n_threads; ++i) pool.emplace_back(worker);
    worker();
    for (std::thread& th : pool) th.join();

    report.checks = std::move(results);
    report.summary.total = static_cast<int>(report.checks.size());
    for (const CheckResult& r : report.checks) {
        switch (r.status) {
            case Status::pass: ++report.summary.passed; break;
            case Status::fail: ++report.summary.failed; break;
            case Status::skipped: ++report.summary.skipped; break;
        }
    }
    return report;
}

} // namespace qcap::verify
