#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fhs/bounds.hpp"
#include "fhs/constructions.hpp"
#include "fhs/correlation.hpp"
#include "fhs/cyclotomy.hpp"
#include "fhs/field.hpp"

namespace fhs {

// Seeded property suite behind cmd_verify: correlation-sum identities on
// random sets, the cyclotomic row-sum identity across every small field, the
// interleaving conservation law, and bound soundness on everything generated.
// Output is a pure function of (seed, cases).

struct verify_options {
    std::uint64_t seed = 12345;
    int cases = 1000;
    int interleave_cases = 100;
    std::uint32_t lemma11_max_q = 4096;
    bool inject_fault = false; // harness self-test: corrupt one sum, expect detection
};

struct verify_outcome {
    bool pass = true;
    std::string log;
};

namespace detail {

inline std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

inline sequence_set random_set(std::mt19937_64& rng, std::uint32_t max_n, std::uint32_t max_m, std::uint32_t max_l) {
    sequence_set set;
    set.prov.construction = "random";
    const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng_below(rng, max_n));
    const std::uint32_t m = 1 + static_cast<std::uint32_t>(rng_below(rng, max_m));
    const std::uint32_t l = 1 + static_cast<std::uint32_t>(rng_below(rng, max_l));
    for (std::uint32_t i = 0; i < l; ++i) {
        sequence x;
        x.alphabet_size = m;
        x.symbols.resize(n);
        for (auto& s : x.symbols) s = static_cast<std::uint32_t>(rng_below(rng, m));
        set.sequences.push_back(std::move(x));
    }
    return set;
}

// Perfectly balanced random set: every sequence a shuffled multiset with each
// symbol n/m times. Such sets sit on the average-correlation bound exactly.
inline sequence_set random_balanced_set(std::mt19937_64& rng, std::uint32_t n_per_symbol, std::uint32_t m,
                                        std::uint32_t l) {
    sequence_set set;
    set.prov.construction = "random_balanced";
    const std::uint32_t n = n_per_symbol * m;
    for (std::uint32_t i = 0; i < l; ++i) {
        sequence x;
        x.alphabet_size = m;
        x.symbols.reserve(n);
        for (std::uint32_t a = 0; a < m; ++a)
            for (std::uint32_t c = 0; c < n_per_symbol; ++c) x.symbols.push_back(a);
        for (std::uint32_t t = n; t > 1; --t)
            std::swap(x.symbols[t - 1], x.symbols[rng_below(rng, t)]);
        set.sequences.push_back(std::move(x));
    }
    return set;
}

inline interleave_map random_bijection(std::mt19937_64& rng, std::uint32_t n, std::uint32_t l,
                                       std::uint32_t target_n, std::uint32_t target_l) {
    interleave_map map;
    map.source_n = n;
    map.source_l = l;
    map.target_n = target_n;
    map.target_l = target_l;
    const std::size_t cells = static_cast<std::size_t>(n) * l;
    std::vector<std::uint32_t> perm(cells);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t t = cells; t > 1; --t) std::swap(perm[t - 1], perm[rng_below(rng, t)]);
    map.cells.reserve(cells);
    for (std::uint32_t c = 0; c < cells; ++c)
        map.cells.emplace_back(perm[c] / n, perm[c] % n);
    return map;
}

struct check_counter {
    int checked = 0;
    int failed = 0;
    std::ostringstream& log;

    explicit check_counter(std::ostringstream& l) : log(l) {}

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (!ok) {
            ++failed;
            log << "FAIL: " << what << "\n";
        }
    }
};

// Bounds may never be violated by real data.
inline void check_soundness(check_counter& cc, const sequence_set& set, const std::string& tag) {
    auto r = full_report(set);
    if (r.n >= 2) {
        std::int64_t lg = lg_bound(r.n, r.m);
        for (std::uint32_t i = 0; i < r.l; ++i)
            cc.expect(r.max_out_of_phase_auto(i) >= lg, tag + ": autocorrelation floor violated");
    }
    if (r.n >= 2 && r.l >= 2) {
        cc.expect(peng_fan_holds(r.n, r.m, r.l, r.require_h_auto(), r.require_h_cross()),
                  tag + ": set bound violated at the attained pair");
        int128 lhs = checked_mul(static_cast<int128>(r.m), checked_add(r.s_auto, r.s_cross));
        int128 nl = checked_mul(static_cast<int128>(r.n), static_cast<int128>(r.l));
        cc.expect(lhs >= checked_mul(nl, checked_sub(nl, r.m)), tag + ": average bound violated");
    }
}

} // namespace detail

inline verify_outcome run_verify(const verify_options& opt) {
    std::ostringstream log;
    detail::check_counter cc(log);
    std::mt19937_64 rng(opt.seed);

    // 1. correlation-sum identities on random sets
    for (int c = 0; c < opt.cases; ++c) {
        auto set = detail::random_set(rng, 64, 16, 8);
        bool ok = verify_sum_identities(set);
        if (opt.inject_fault && c == 0) {
            // corrupt the engine output path once to prove the check bites
            auto r = full_report(set);
            int128 lhs = checked_add(checked_add(r.s_auto, r.s_cross), 1);
            int128 rhs = 0;
            for (std::uint32_t a = 0; a < r.m; ++a)
                rhs = checked_add(rhs, checked_mul(r.set_counts[a], r.set_counts[a] - 1));
            cc.expect(lhs == rhs, "injected fault: set-level sum identity off by one at N=" +
                                      std::to_string(r.n) + " M=" + std::to_string(r.m) +
                                      " L=" + std::to_string(r.l));
        }
        cc.expect(ok, "sum identities broken on random set #" + std::to_string(c));
        detail::check_soundness(cc, set, "random set #" + std::to_string(c));
    }
    log << "identity fuzz: " << opt.cases << " random sets\n";

    // 2. cyclotomic row-sum identity over every field of order <= limit
    {
        int schemes = 0;
        for (std::uint32_t q = 3; q <= opt.lemma11_max_q; ++q) {
            auto fs = factorize(q);
            if (fs.size() != 1) continue;
            field_context ctx = build_field(q);
            for (std::uint32_t m = 2; m < q; ++m) {
                if ((q - 1) % m != 0) continue;
                ++schemes;
                auto direct = verify_lemma11_direct(ctx, m);
                bool ok = std::all_of(direct.begin(), direct.end(), [](bool b) { return b; });
                if (q <= 512) {
                    auto s = build_scheme(ctx, m);
                    auto table = verify_lemma11(s);
                    ok = ok && std::all_of(table.begin(), table.end(), [](bool b) { return b; });
                    ok = ok && table == direct;
                }
                cc.expect(ok, "cyclotomic row sums off at q=" + std::to_string(q) + " M=" + std::to_string(m));
            }
        }
        log << "cyclotomic row sums: " << schemes << " schemes, q <= " << opt.lemma11_max_q << "\n";
    }

    // 3. interleaving preserves S_a + S_c and the average-bound verdict
    for (int c = 0; c < opt.interleave_cases; ++c) {
        std::uint32_t m = 2 + static_cast<std::uint32_t>(detail::rng_below(rng, 6));
        std::uint32_t l = 2 + static_cast<std::uint32_t>(detail::rng_below(rng, 5));
        sequence_set set;
        if (c % 2 == 0) {
            set = detail::random_balanced_set(rng, 1 + static_cast<std::uint32_t>(detail::rng_below(rng, 4)), m, l);
        } else {
            set = detail::random_set(rng, 24, m, l);
            if (set.size() < 2 || set.length() < 2) set = detail::random_balanced_set(rng, 2, m, 2);
        }
        const std::uint32_t n = set.length();
        const std::uint32_t ll = set.size();
        // pick a target factorization of n*ll with both sides >= 2
        std::vector<std::pair<std::uint32_t, std::uint32_t>> shapes;
        const std::uint64_t cells = static_cast<std::uint64_t>(n) * ll;
        for (std::uint32_t tn = 2; tn <= cells / 2; ++tn)
            if (cells % tn == 0 && cells / tn >= 2) shapes.emplace_back(tn, static_cast<std::uint32_t>(cells / tn));
        auto [tn, tl] = shapes[detail::rng_below(rng, shapes.size())];
        auto map = detail::random_bijection(rng, n, ll, tn, tl);
        auto out = interleave(set, map);

        auto r0 = full_report(set);
        auto r1 = full_report(out);
        cc.expect(checked_add(r0.s_auto, r0.s_cross) == checked_add(r1.s_auto, r1.s_cross),
                  "interleaving changed the correlation sum at case " + std::to_string(c));
        cc.expect(ahc_verdict(r0).verdict == ahc_verdict(r1).verdict,
                  "interleaving changed the average-bound verdict at case " + std::to_string(c));
    }
    log << "interleaving fuzz: " << opt.interleave_cases << " random bijections\n";

    // 4. bound soundness across the generator families
    {
        int sets = 0;
        for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
            detail::check_soundness(cc, gen_kumar(p), "kumar p=" + std::to_string(p));
            detail::check_soundness(cc, gen_p2p(p), "p2p p=" + std::to_string(p));
            sets += 2;
            for (std::uint32_t m = 2; m < p; ++m) {
                if ((p - 1) % m != 0) continue;
                detail::check_soundness(cc, gen_cyclotomic_a(p, m),
                                        "cyclotomic_a p=" + std::to_string(p) + " M=" + std::to_string(m));
                ++sets;
            }
        }
        for (std::uint32_t q : {4u, 5u, 7u, 8u, 9u, 13u, 16u, 25u, 27u}) {
            for (std::uint32_t m = 2; m < q; ++m) {
                if ((q - 1) % m != 0) continue;
                detail::check_soundness(cc, gen_cyclotomic_b(q, m),
                                        "cyclotomic_b q=" + std::to_string(q) + " M=" + std::to_string(m));
                ++sets;
            }
        }
        for (auto [k, n, d] : {std::tuple{2u, 5u, 2u}, {3u, 7u, 2u}, {2u, 9u, 3u}}) {
            detail::check_soundness(cc, gen_nhz(k, n, d), "nhz");
            ++sets;
        }
        for (auto [n, k] : {std::pair{15u, 2u}, {35u, 2u}, {35u, 4u}, {21u, 2u}}) {
            detail::check_soundness(cc, gen_theorem17(n, k), "theorem17");
            ++sets;
        }
        log << "bound soundness: " << sets << " generated sets\n";
    }

    verify_outcome out;
    out.pass = cc.failed == 0;
    log << "checks: " << cc.checked << ", failures: " << cc.failed << "\n";
    log << (out.pass ? "PASS" : "FAIL") << "\n";
    out.log = log.str();
    return out;
}

} // namespace fhs
