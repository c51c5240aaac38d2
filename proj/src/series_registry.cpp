#include "qcap/series_registry.hpp"

#include <charconv>

#include "qcap/qdiff.hpp"
#include "qcap/theta.hpp"

namespace qcap {

UnknownSeriesError::UnknownSeriesError(const std::string& name)
    : std::invalid_argument("unknown series: " + name), name(name) {}

namespace {

std::optional<int> parse_int(std::string_view s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
    return v;
}

// "C<M>-finite" -> M, etc.
std::optional<int> match_pattern(std::string_view name, std::string_view prefix,
                                 std::string_view suffix) {
    if (name.size() <= prefix.size() + suffix.size()) return std::nullopt;
    if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
    if (name.substr(name.size() - suffix.size()) != suffix) return std::nullopt;
    return parse_int(name.substr(prefix.size(), name.size() - prefix.size() - suffix.size()));
}

} // namespace

QSeries expand_series(const std::string& name, int order, int alpha, int beta) {
    if (order < 1) throw SeriesError("expand needs q_order >= 1");
    const GapConfig cfg{alpha, beta};

    if (name == "C1-refined") return brute_force_series(kConfigC1, std::nullopt, order);
    if (name == "C2-refined") return brute_force_series(kConfigC2, std::nullopt, order);
    if (name == "C2star-refined") return brute_force_series(kConfigC2Star, std::nullopt, order);
    if (name == "C3-refined") return brute_force_series(kConfigC3, std::nullopt, order);
    if (name == "Cab-refined") return brute_force_series(cfg, std::nullopt, order);
    if (name == "Theta1") return false_theta(1, FalseThetaForm::character, order);
    if (name == "Theta2") return false_theta(2, FalseThetaForm::character, order);
    if (name == "theta-tq4") return theta_sum(ThetaSpec{Monomial{1, 1, 4}, 6}, order);
    if (name == "theta-tq") return theta_sum(ThetaSpec{Monomial{1, 1, 1}, 6}, order);
    if (name == "theta-neg-t2q2") return theta_sum(ThetaSpec{Monomial{-1, 2, 2}, 6}, order);

    if (auto m = match_pattern(name, "C", "-finite")) {
        if (*m < -2 || *m == -1) throw UnknownSeriesError(name);
        return finite_C(cfg, *m, order);
    }
    if (auto n = match_pattern(name, "gamma", "")) {
        if (*n < 0) throw UnknownSeriesError(name);
        return gamma_seq(cfg, *n, order).back();
    }
    if (auto n = match_pattern(name, "delta", "")) {
        if (*n < 0) throw UnknownSeriesError(name);
        return delta_seq(cfg, *n, order).back();
    }
    if (auto n = match_pattern(name, "F", "")) {
        if (*n < 0) throw UnknownSeriesError(name);
        return gamma_seq(cfg, *n, order).back(); // z^n coefficient of F
    }
    if (auto n = match_pattern(name, "H", "")) {
        if (*n < 0) throw UnknownSeriesError(name);
        return delta_seq(cfg, *n, order).back(); // z^n coefficient of H
    }
    throw UnknownSeriesError(name);
}

const std::vector<std::string>& series_name_hints() {
    static const std::vector<std::string> hints = {
        "C1-refined",  "C2-refined",    "C2star-refined", "C3-refined", "Cab-refined",
        "Theta1",      "Theta2",        "theta-tq4",      "theta-tq",   "theta-neg-t2q2",
        "C<M>-finite", "gamma<n>",      "delta<n>",       "F<n>",       "H<n>",
    };
    return hints;
}

} // namespace qcap
