#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "fhs/errors.hpp"
#include "fhs/rational.hpp"
#include "fhs/sequence.hpp"

namespace fhs {

// Number of positional hits between X and the cyclic tau-shift of Y.
inline std::int64_t hamming_correlation(const sequence& x, const sequence& y, std::uint32_t tau) {
    if (x.length() != y.length() || x.alphabet_size != y.alphabet_size)
        throw shape_mismatch("correlation needs matching length and alphabet");
    const std::uint32_t n = x.length();
    if (tau >= n) throw invalid_param("shift must lie in [0, N)");
    std::int64_t hits = 0;
    for (std::uint32_t t = 0; t < n; ++t)
        if (x.symbols[t] == y.symbols[(t + tau) % n]) ++hits;
    return hits;
}

// Full shift profile of a pair. Walking per-symbol position lists costs
// sum_a N_X(a)*N_Y(a) instead of N^2, which is what makes the parameter
// sweeps cheap.
inline std::vector<std::int64_t> correlation_profile(const sequence& x, const sequence& y) {
    if (x.length() != y.length() || x.alphabet_size != y.alphabet_size)
        throw shape_mismatch("correlation needs matching length and alphabet");
    const std::uint32_t n = x.length();
    const std::uint32_t m = x.alphabet_size;

    std::vector<std::vector<std::uint32_t>> pos_x(m), pos_y(m);
    for (std::uint32_t t = 0; t < n; ++t) pos_x[x.symbols[t]].push_back(t);
    for (std::uint32_t t = 0; t < n; ++t) pos_y[y.symbols[t]].push_back(t);

    std::vector<std::int64_t> prof(n, 0);
    for (std::uint32_t a = 0; a < m; ++a)
        for (std::uint32_t s : pos_x[a])
            for (std::uint32_t t : pos_y[a]) ++prof[(t + n - s) % n];
    return prof;
}

struct correlation_report {
    std::uint32_t n = 0, m = 0, l = 0;

    // auto_profiles[i][tau]; cross_profiles holds unordered pairs i < j in row
    // order (0,1), (0,2), ..., with H_{j,i}(tau) = H_{i,j}(N - tau mod N).
    std::vector<std::vector<std::int64_t>> auto_profiles;
    std::vector<std::vector<std::int64_t>> cross_profiles;

    std::optional<std::int64_t> h_auto;  // max over members, shifts in [1, N); needs N >= 2
    std::optional<std::int64_t> h_cross; // max over ordered pairs, shifts in [0, N); needs L >= 2
    int128 s_auto = 0;                   // sum of out-of-phase autocorrelations
    int128 s_cross = 0;                  // sum over ordered distinct pairs, all shifts
    std::optional<rational> a_auto;      // s_auto / (L (N-1))
    std::optional<rational> a_cross;     // s_cross / (L (L-1) N)

    std::vector<std::vector<std::int64_t>> member_counts;
    std::vector<std::int64_t> set_counts;

    std::size_t pair_index(std::uint32_t i, std::uint32_t j) const {
        // i < j
        return static_cast<std::size_t>(i) * (2 * l - i - 1) / 2 + (j - i - 1);
    }

    const std::vector<std::int64_t>& cross_profile(std::uint32_t i, std::uint32_t j) const {
        return cross_profiles[pair_index(std::min(i, j), std::max(i, j))];
    }

    std::int64_t cross_value(std::uint32_t i, std::uint32_t j, std::uint32_t tau) const {
        if (i < j) return cross_profiles[pair_index(i, j)][tau];
        return cross_profiles[pair_index(j, i)][(n - tau) % n];
    }

    std::int64_t max_out_of_phase_auto(std::uint32_t i) const {
        std::int64_t mx = 0;
        for (std::uint32_t tau = 1; tau < n; ++tau) mx = std::max(mx, auto_profiles[i][tau]);
        return mx;
    }

    // max over the defined components of (h_auto, h_cross)
    std::int64_t h_set() const {
        if (!h_auto && !h_cross) throw degenerate_set("maximum correlation needs N >= 2 or L >= 2");
        std::int64_t mx = 0;
        if (h_auto) mx = std::max(mx, *h_auto);
        if (h_cross) mx = std::max(mx, *h_cross);
        return mx;
    }

    std::int64_t require_h_auto() const {
        if (!h_auto) throw degenerate_set("maximum out-of-phase autocorrelation needs N >= 2");
        return *h_auto;
    }
    std::int64_t require_h_cross() const {
        if (!h_cross) throw degenerate_set("maximum crosscorrelation needs L >= 2");
        return *h_cross;
    }
    rational require_a_auto() const {
        if (!a_auto) throw degenerate_set("average autocorrelation needs N >= 2");
        return *a_auto;
    }
    rational require_a_cross() const {
        if (!a_cross) throw degenerate_set("average crosscorrelation needs L >= 2");
        return *a_cross;
    }
};

inline correlation_report full_report(const sequence_set& set) {
    validate_set(set);
    correlation_report r;
    r.n = set.length();
    r.m = set.alphabet_size();
    r.l = set.size();

    r.member_counts.reserve(r.l);
    for (const auto& x : set.sequences) r.member_counts.push_back(x.counts());
    r.set_counts = set.set_counts();

    r.auto_profiles.reserve(r.l);
    for (const auto& x : set.sequences) r.auto_profiles.push_back(correlation_profile(x, x));

    if (r.l >= 2) {
        r.cross_profiles.reserve(static_cast<std::size_t>(r.l) * (r.l - 1) / 2);
        for (std::uint32_t i = 0; i < r.l; ++i)
            for (std::uint32_t j = i + 1; j < r.l; ++j)
                r.cross_profiles.push_back(correlation_profile(set.sequences[i], set.sequences[j]));
    }

    if (r.n >= 2) {
        std::int64_t mx = 0;
        for (std::uint32_t i = 0; i < r.l; ++i) {
            for (std::uint32_t tau = 1; tau < r.n; ++tau) {
                r.s_auto = checked_add(r.s_auto, r.auto_profiles[i][tau]);
                mx = std::max(mx, r.auto_profiles[i][tau]);
            }
        }
        r.h_auto = mx;
        r.a_auto = rational(r.s_auto, static_cast<int128>(r.l) * (r.n - 1));
    }

    if (r.l >= 2) {
        std::int64_t mx = 0;
        for (const auto& prof : r.cross_profiles) {
            for (std::uint32_t tau = 0; tau < r.n; ++tau) {
                // the unordered profile stands for both ordered pairs
                r.s_cross = checked_add(r.s_cross, 2 * prof[tau]);
                mx = std::max(mx, prof[tau]);
            }
        }
        r.h_cross = mx;
        r.a_cross = rational(r.s_cross, static_cast<int128>(r.l) * (r.l - 1) * r.n);
    }

    return r;
}

struct distribution_verdict {
    std::vector<bool> balanced;           // per sequence: max count - min count <= 1
    std::vector<bool> perfectly_balanced; // per sequence: all counts equal
    bool uniformly_distributed = false;   // all aggregate counts equal
    std::vector<std::vector<std::int64_t>> member_counts;
    std::vector<std::int64_t> set_counts;

    bool all_balanced() const {
        for (bool b : balanced)
            if (!b) return false;
        return true;
    }
    bool all_perfectly_balanced() const {
        for (bool b : perfectly_balanced)
            if (!b) return false;
        return true;
    }
};

inline distribution_verdict distribution(const sequence_set& set) {
    validate_set(set);
    distribution_verdict v;
    for (const auto& x : set.sequences) {
        auto c = x.counts();
        auto [mn, mx] = std::minmax_element(c.begin(), c.end());
        v.balanced.push_back(*mx - *mn <= 1);
        v.perfectly_balanced.push_back(*mx == *mn);
        v.member_counts.push_back(std::move(c));
    }
    v.set_counts = set.set_counts();
    auto [mn, mx] = std::minmax_element(v.set_counts.begin(), v.set_counts.end());
    v.uniformly_distributed = *mx == *mn;
    return v;
}

// Correlation-sum identities: for every ordered pair the shift-sum of the
// profile equals sum_a N_X(a) N_Y(a), and at set level
// S_a + S_c = sum_a N(a) (N(a) - 1). Both always hold; a false return means
// the engine itself is broken.
inline bool verify_sum_identities(const sequence_set& set) {
    auto r = full_report(set);

    for (std::uint32_t i = 0; i < r.l; ++i) {
        for (std::uint32_t j = 0; j < r.l; ++j) {
            int128 lhs = 0;
            if (i == j)
                for (std::uint32_t tau = 0; tau < r.n; ++tau) lhs = checked_add(lhs, r.auto_profiles[i][tau]);
            else
                for (std::uint32_t tau = 0; tau < r.n; ++tau) lhs = checked_add(lhs, r.cross_value(i, j, tau));
            int128 rhs = 0;
            for (std::uint32_t a = 0; a < r.m; ++a)
                rhs = checked_add(rhs, checked_mul(r.member_counts[i][a], r.member_counts[j][a]));
            if (lhs != rhs) return false;
        }
    }

    int128 lhs = checked_add(r.s_auto, r.s_cross);
    int128 rhs = 0;
    for (std::uint32_t a = 0; a < r.m; ++a)
        rhs = checked_add(rhs, checked_mul(r.set_counts[a], r.set_counts[a] - 1));
    return lhs == rhs;
}

} // namespace fhs
