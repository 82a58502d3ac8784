#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fhs/correlation.hpp"
#include "fhs/errors.hpp"
#include "fhs/rational.hpp"

namespace fhs {

// Single-sequence floor on the maximum out-of-phase autocorrelation:
// ceil((N-b)(N+b-M) / (M(N-1))) with b = N mod M.
inline std::int64_t lg_bound(std::int64_t n, std::int64_t m) {
    if (n < 2 || m < 1) throw invalid_param("lg_bound needs N >= 2, M >= 1");
    std::int64_t b = n % m;
    int128 num = checked_mul(static_cast<int128>(n - b), static_cast<int128>(n + b - m));
    if (num <= 0) return 0;
    int128 den = checked_mul(static_cast<int128>(m), static_cast<int128>(n - 1));
    return static_cast<std::int64_t>((num + den - 1) / den);
}

namespace detail {

// Signed evaluation of the set-level linear form
// M(N-1) la + N M(L-1) lc  vs  N(NL - M).
inline bool pf_holds_numeric(std::int64_t n, std::int64_t m, std::int64_t l, int128 la, int128 lc) {
    int128 lhs = checked_add(checked_mul(checked_mul(static_cast<int128>(m), n - 1), la),
                             checked_mul(checked_mul(checked_mul(static_cast<int128>(n), m), l - 1), lc));
    int128 rhs = checked_mul(static_cast<int128>(n), checked_sub(checked_mul(static_cast<int128>(n), l), m));
    return lhs >= rhs;
}

// An optimal pair is a nonnegative pair on the bound whose (la-1, lc-1)
// decrement falls below it; the form is strictly increasing in both
// coordinates, so the single decrement settles every larger one.
inline bool pf_pair_optimal(std::int64_t n, std::int64_t m, std::int64_t l, int128 la, int128 lc) {
    if (la < 0 || lc < 0) return false;
    return pf_holds_numeric(n, m, l, la, lc) && !pf_holds_numeric(n, m, l, la - 1, lc - 1);
}

} // namespace detail

// Set-level bound test at a candidate correlation pair. Pairs with a negative
// coordinate do not count as satisfying.
inline bool peng_fan_holds(std::int64_t n, std::int64_t m, std::int64_t l, std::int64_t la, std::int64_t lc) {
    if (n < 2 || l < 2) throw invalid_param("peng_fan_holds needs N >= 2, L >= 2");
    if (la < 0 || lc < 0) return false;
    return detail::pf_holds_numeric(n, m, l, la, lc);
}

enum class verdict_kind { optimal, near_optimal, not_optimal, undefined };

inline const char* verdict_name(verdict_kind v) {
    switch (v) {
    case verdict_kind::optimal: return "optimal";
    case verdict_kind::near_optimal: return "near_optimal";
    case verdict_kind::not_optimal: return "not_optimal";
    case verdict_kind::undefined: return "undefined";
    }
    return "undefined";
}

inline verdict_kind verdict_from_name(const std::string& s) {
    if (s == "optimal") return verdict_kind::optimal;
    if (s == "near_optimal") return verdict_kind::near_optimal;
    if (s == "not_optimal") return verdict_kind::not_optimal;
    if (s == "undefined") return verdict_kind::undefined;
    throw invalid_param("unknown verdict: " + s);
}

struct optimality_verdict {
    std::string bound_name;
    verdict_kind verdict = verdict_kind::undefined;
    std::vector<std::pair<std::string, int128>> witnesses;

    int128 witness(const std::string& key) const {
        for (const auto& [k, v] : witnesses)
            if (k == key) return v;
        throw invalid_param("no witness named " + key);
    }
};

// Classification against the set-level correlation bound: the attained pair is
// optimal when it sits on the bound with no room below, near-optimal when it
// is exactly one above such a pair.
inline optimality_verdict mhc_verdict(std::int64_t h_a, std::int64_t h_c, std::int64_t n, std::int64_t m,
                                      std::int64_t l) {
    optimality_verdict v;
    v.bound_name = "peng_fan";
    if (l < 2 || n < 2) {
        v.verdict = verdict_kind::undefined;
        return v;
    }
    int128 lhs0 = checked_add(checked_mul(checked_mul(static_cast<int128>(m), n - 1), h_a),
                              checked_mul(checked_mul(checked_mul(static_cast<int128>(n), m), l - 1), h_c));
    int128 rhs = checked_mul(static_cast<int128>(n), checked_sub(checked_mul(static_cast<int128>(n), l), m));
    v.witnesses.emplace_back("h_a", h_a);
    v.witnesses.emplace_back("h_c", h_c);
    v.witnesses.emplace_back("lhs_attained", lhs0);
    v.witnesses.emplace_back("rhs", rhs);

    if (detail::pf_pair_optimal(n, m, l, h_a, h_c))
        v.verdict = verdict_kind::optimal;
    else if (detail::pf_pair_optimal(n, m, l, h_a - 1, h_c - 1))
        v.verdict = verdict_kind::near_optimal;
    else
        v.verdict = verdict_kind::not_optimal;
    return v;
}

inline optimality_verdict mhc_verdict(const correlation_report& r) {
    if (r.l < 2 || r.n < 2) {
        optimality_verdict v;
        v.bound_name = "peng_fan";
        v.verdict = verdict_kind::undefined;
        return v;
    }
    return mhc_verdict(r.require_h_auto(), r.require_h_cross(), r.n, r.m, r.l);
}

// Average-correlation bound in cross-multiplied integer form:
// M (S_a + S_c) >= N L (N L - M), optimal exactly at equality.
inline optimality_verdict ahc_verdict(int128 s_a, int128 s_c, std::int64_t n, std::int64_t m, std::int64_t l) {
    optimality_verdict v;
    v.bound_name = "average_hamming";
    if (n < 2 || l < 2) {
        v.verdict = verdict_kind::undefined;
        return v;
    }
    int128 lhs = checked_mul(static_cast<int128>(m), checked_add(s_a, s_c));
    int128 nl = checked_mul(static_cast<int128>(n), l);
    int128 rhs = checked_mul(nl, checked_sub(nl, m));
    v.witnesses.emplace_back("m_times_sum", lhs);
    v.witnesses.emplace_back("rhs", rhs);
    v.verdict = lhs == rhs ? verdict_kind::optimal : verdict_kind::not_optimal;
    return v;
}

inline optimality_verdict ahc_verdict(const correlation_report& r) {
    return ahc_verdict(r.s_auto, r.s_cross, r.n, r.m, r.l);
}

} // namespace fhs
