#include "qcap/partitions.hpp"

#include <algorithm>

namespace qcap {

bool is_level3_gap(const Partition& p) {
    for (std::size_t i = 0; i + 1 < p.parts.size(); ++i) {
        int d = p.parts[i] - p.parts[i + 1];
        if (d < 2) return false;
        if ((d == 2 || d == 3) && (p.parts[i] + p.parts[i + 1]) % 3 != 0) return false;
    }
    return true;
}

bool is_level3_multiplicity(const Partition& p) {
    // Repeated parts are invisible to the indicators; reject them first.
    for (std::size_t i = 0; i + 1 < p.parts.size(); ++i)
        if (p.parts[i] == p.parts[i + 1]) return false;

    int max_part = p.parts.empty() ? 0 : p.parts.front();
    std::vector<char> psi(static_cast<std::size_t>(max_part) + 1, 0);
    for (int part : p.parts) psi[static_cast<std::size_t>(part)] = 1;
    auto has = [&](int j) { return j >= 1 && j <= max_part ? psi[static_cast<std::size_t>(j)] : 0; };

    for (int j = 1; 3 * j - 2 <= max_part; ++j) {
        if (has(3 * j + 2) + has(3 * j) + has(3 * j - 1) > 1) return false;
        if (has(3 * j + 1) + has(3 * j) + has(3 * j - 2) > 1) return false;
        if (has(3 * j - 1) + has(3 * j - 2) > 1) return false;
    }
    return true;
}

long long count_cm(int m, int n) {
    long long count = 0;
    enumerate_partitions(n, std::nullopt, [&](const Partition& p) {
        if (!p.parts.empty() && p.parts.back() < m) return;
        if (is_level3_gap(p)) ++count;
    });
    return count;
}

long long count_c2star(int n) {
    long long count = 0;
    enumerate_partitions(n, std::nullopt, [&](const Partition& p) {
        if (is_level3_gap(p) && !p.has_part(2)) ++count;
    });
    return count;
}

namespace {

// Distinct parts, strictly decreasing, every part passing the residue test.
template <typename Allowed>
long long count_distinct_rec(int remaining, int max_part, const Allowed& allowed) {
    if (remaining == 0) return 1;
    long long count = 0;
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
        if (!allowed(p)) continue;
        count += count_distinct_rec(remaining - p, p - 1, allowed);
    }
    return count;
}

} // namespace

long long count_dj(int j, int n) {
    if (j != 1 && j != 2) throw std::invalid_argument("count_dj needs j in {1, 2}");
    auto allowed = [j](int p) {
        int r = p % 6;
        return r != j && r != 6 - j;
    };
    return count_distinct_rec(n, n, allowed);
}

GapCounts gap_counts(int n) {
    GapCounts g;
    enumerate_partitions(n, std::nullopt, [&](const Partition& p) {
        if (!is_level3_gap(p)) return;
        int smallest = p.parts.empty() ? 0 : p.parts.back();
        ++g.c1;
        if (p.parts.empty() || smallest >= 2) ++g.c2;
        if (p.parts.empty() || smallest >= 3) ++g.c3;
        if (smallest != 2) ++g.c2star; // 2 can only be the smallest part
    });
    return g;
}

namespace {

// Walks level-3 gap partitions directly, largest part first. The next
// part below prev must satisfy prev - p >= 4, or prev - p in {2, 3} with
// 3 | (prev + p). Every node of the walk is itself a valid partition.
struct GapWalker {
    const GapConfig& cfg;
    QSeries& out;
    int order;

    void emit(long long size, int nu1, int nu2, int smallest) {
        // Indicator weight: a partition containing part 1 (resp. 2)
        // contributes only when alpha (resp. beta) is 1. Parts 1 and 2
        // can only ever be the final, smallest part.
        if (smallest == 1 && cfg.alpha == 0) return;
        if (smallest == 2 && cfg.beta == 0) return;
        out.add_term(static_cast<int>(size), nu1 - nu2, 1);
    }

    void extend(int prev, long long size, int nu1, int nu2) {
        long long budget = order - 1 - size;
        int top = static_cast<int>(std::min<long long>(prev - 2, budget));
        for (int p = top; p >= 1; --p) {
            int d = prev - p;
            if (d <= 3 && (prev + p) % 3 != 0) continue;
            int n1 = nu1 + (p % 3 == 1);
            int n2 = nu2 + (p % 3 == 2);
            emit(size + p, n1, n2, p);
            extend(p, size + p, n1, n2);
        }
    }

    void run(int max_part) {
        emit(0, 0, 0, 0); // empty partition
        int top = static_cast<int>(std::min<long long>(max_part, order - 1));
        for (int p = top; p >= 1; --p) {
            int n1 = (p % 3 == 1);
            int n2 = (p % 3 == 2);
            emit(p, n1, n2, p);
            extend(p, p, n1, n2);
        }
    }
};

} // namespace

QSeries brute_force_series(const GapConfig& cfg, std::optional<int> max_part, int order) {
    if (order < 1) throw SeriesError("brute_force_series needs order >= 1");
    QSeries out(0, order);
    GapWalker w{cfg, out, order};
    w.run(max_part.value_or(order - 1));
    return out;
}

} // namespace qcap
