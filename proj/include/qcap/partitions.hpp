#pragma once

#include <optional>
#include <vector>

#include "qcap/qseries.hpp"

namespace qcap {

// A partition: weakly decreasing positive parts.
struct Partition {
    std::vector<int> parts;

    long long size() const {
        long long s = 0;
        for (int p : parts) s += p;
        return s;
    }
    // Number of parts congruent to j mod 3, j in {1, 2}.
    int nu(int j) const {
        int c = 0;
        for (int p : parts)
            if (p % 3 == j) ++c;
        return c;
    }
    bool has_part(int j) const {
        for (int p : parts)
            if (p == j) return true;
        return false;
    }
    bool is_valid() const {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 1) return false;
            if (i + 1 < parts.size() && parts[i] < parts[i + 1]) return false;
        }
        return true;
    }
};

// Level-3 gap condition: successive parts differ by at least 2, and by
// exactly 2 or 3 only when their sum is divisible by 3. A repeated part
// (difference 0) is rejected.
bool is_level3_gap(const Partition& p);

// The same condition via the part-indicator inequalities
//   psi(3j+2) + psi(3j) + psi(3j-1) <= 1
//   psi(3j+1) + psi(3j) + psi(3j-2) <= 1
//   psi(3j-1) + psi(3j-2)           <= 1   (all j >= 1),
// after an explicit distinctness test (indicators cannot see multiplicity).
bool is_level3_multiplicity(const Partition& p);

// Visit every partition of n (largest part <= max_part when given)
// exactly once, largest part first. The callback receives a reusable
// buffer that must not be retained.
template <typename Fn>
void enumerate_partitions(int n, std::optional<int> max_part, Fn&& fn) {
    Partition buf;
    auto rec = [&](auto&& self, int remaining, int maxp) -> void {
        if (remaining == 0) {
            fn(static_cast<const Partition&>(buf));
            return;
        }
        int top = maxp < remaining ? maxp : remaining;
        for (int p = top; p >= 1; --p) {
            buf.parts.push_back(p);
            self(self, remaining - p, p);
            buf.parts.pop_back();
        }
    };
    rec(rec, n, max_part.value_or(n));
}

// c_m(n): partitions of n with level-3 gaps and all parts >= m,
// counted by full enumeration plus filtering.
long long count_cm(int m, int n);

// c*_2(n): level-3 gap partitions of n that do not contain 2 as a part.
long long count_c2star(int n);

// d_j(n): partitions of n into distinct parts not congruent to +-j mod 6,
// enumerated directly over the allowed residues (independent of the gap
// enumerator).
long long count_dj(int j, int n);

// One enumeration pass computing c_1, c_2, c_3 and c*_2 together.
struct GapCounts {
    long long c1 = 0, c2 = 0, c3 = 0, c2star = 0;
};
GapCounts gap_counts(int n);

// Smallest-part indicator weights: alpha gates part 1, beta gates part 2.
// (alpha, beta) = (1,1), (0,1), (1,0), (0,0) select the series whose
// t = 1 specializations count c_1, c_2, c*_2 and c_3 respectively.
struct GapConfig {
    int alpha = 1;
    int beta = 1;
};

inline constexpr GapConfig kConfigC1{1, 1};
inline constexpr GapConfig kConfigC2{0, 1};
inline constexpr GapConfig kConfigC2Star{1, 0};
inline constexpr GapConfig kConfigC3{0, 0};

// Sum over level-3 gap partitions with parts <= max_part (unbounded when
// absent) and size < order of
//   (1 - (1-alpha) psi_1) (1 - (1-beta) psi_2) t^(nu1 - nu2) q^|lambda|.
QSeries brute_force_series(const GapConfig& cfg, std::optional<int> max_part, int order);

} // namespace qcap
