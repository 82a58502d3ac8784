#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fhs/cyclotomy.hpp"
#include "fhs/errors.hpp"
#include "fhs/field.hpp"
#include "fhs/sequence.hpp"

namespace fhs {

// Generators for the sequence families the toolkit ships, plus the generic
// interleaving transform. Every generator is deterministic in its parameters;
// the cyclotomic ones inherit determinism from the canonical field contexts.

// (p^2, p, p) set over the alphabet {0, p, 2p, ...}: write t = t0*p + t1 and
// hop to p * <t0*t1 + i> mod p^2. Stored as ids <t0*t1 + i>_p with labels p*id.
inline sequence_set gen_kumar(std::uint32_t p) {
    if (p < 3 || !is_prime_u64(p)) throw invalid_param("kumar needs an odd prime p");
    sequence_set set;
    set.prov.construction = "kumar";
    set.prov.params = {{"p", p}};
    std::vector<std::string> labels(p);
    for (std::uint32_t k = 0; k < p; ++k) labels[k] = std::to_string(static_cast<std::uint64_t>(p) * k);
    for (std::uint32_t i = 0; i < p; ++i) {
        sequence x;
        x.alphabet_size = p;
        x.labels = labels;
        x.symbols.resize(static_cast<std::size_t>(p) * p);
        for (std::uint32_t t0 = 0; t0 < p; ++t0)
            for (std::uint32_t t1 = 0; t1 < p; ++t1)
                x.symbols[static_cast<std::size_t>(t0) * p + t1] =
                    static_cast<std::uint32_t>((static_cast<std::uint64_t>(t0) * t1 + i) % p);
        set.sequences.push_back(std::move(x));
    }
    return set;
}

// No-hit-zone family: length k*N over the alphabet Z_k x Z_N (flattened to
// t0*N + b), L = floor(N/d) sequences. The frame offset walks i*d on the low
// half of the frame slots and (L-1-i)*d on the high half; offsets reduce mod N.
inline sequence_set gen_nhz(std::uint32_t k, std::uint32_t n, std::uint32_t d) {
    if (n < 3) throw invalid_param("nhz needs N >= 3");
    if (k < 2 || k >= n) throw invalid_param("nhz needs 2 <= k < N");
    if (d < 1 || 2 * d >= n) throw invalid_param("nhz needs 1 <= d < N/2");
    const std::uint32_t l = n / d;
    sequence_set set;
    set.prov.construction = "nhz";
    set.prov.params = {{"k", k}, {"n", n}, {"d", d}, {"l", l}, {"r", n - l * d}};
    std::vector<std::string> labels(static_cast<std::size_t>(k) * n);
    for (std::uint32_t a = 0; a < k; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            labels[static_cast<std::size_t>(a) * n + b] = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    const std::uint32_t split = k / 2;
    for (std::uint32_t i = 0; i < l; ++i) {
        sequence x;
        x.alphabet_size = k * n;
        x.labels = labels;
        x.symbols.resize(static_cast<std::size_t>(k) * n);
        for (std::uint32_t t1 = 0; t1 < n; ++t1) {
            for (std::uint32_t t0 = 0; t0 < k; ++t0) {
                std::uint64_t off = t0 <= split ? static_cast<std::uint64_t>(i) * d
                                                : static_cast<std::uint64_t>(l - 1 - i) * d;
                std::uint32_t b = static_cast<std::uint32_t>((t1 + off) % n);
                x.symbols[static_cast<std::size_t>(k) * t1 + t0] = t0 * n + b;
            }
        }
        set.sequences.push_back(std::move(x));
    }
    return set;
}

// (p^2-p, p, p) set: t0 = t mod (p-1), t1 = t mod p, hop to <(t0+1)*t1 + i>_p.
inline sequence_set gen_p2p(std::uint32_t p) {
    if (p < 3 || !is_prime_u64(p)) throw invalid_param("p2p needs an odd prime p");
    const std::uint32_t n = p * p - p;
    sequence_set set;
    set.prov.construction = "p2p";
    set.prov.params = {{"p", p}};
    for (std::uint32_t i = 0; i < p; ++i) {
        sequence x;
        x.alphabet_size = p;
        x.symbols.resize(n);
        for (std::uint32_t t = 0; t < n; ++t) {
            std::uint32_t t0 = t % (p - 1);
            std::uint32_t t1 = t % p;
            x.symbols[t] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(t0 + 1) * t1 + i) % p);
        }
        set.sequences.push_back(std::move(x));
    }
    return set;
}

// (p, M, M) cyclotomic set: X_i(0) = i, X_i(t) = <r + i>_M for t in class r.
inline sequence_set gen_cyclotomic_a(std::uint32_t p, std::uint32_t m) {
    if (p < 3 || !is_prime_u64(p)) throw invalid_param("cyclotomic-a needs an odd prime p");
    if (m < 2 || (p - 1) % m != 0) throw invalid_param("cyclotomic-a needs M >= 2 dividing p-1");
    field_context ctx = build_prime_field(p);
    cyclotomic_scheme s = build_scheme(ctx, m);
    sequence_set set;
    set.prov.construction = "cyclotomic_a";
    set.prov.params = {{"p", p}, {"m", m}, {"f", (p - 1) / m}};
    for (std::uint32_t i = 0; i < m; ++i) {
        sequence x;
        x.alphabet_size = m;
        x.symbols.resize(p);
        x.symbols[0] = i;
        for (std::uint32_t t = 1; t < p; ++t) x.symbols[t] = (s.class_of[t] + i) % m;
        set.sequences.push_back(std::move(x));
    }
    return set;
}

// (q-1, M, M) cyclotomic set over GF(q): X_i(t) = <r + i>_M when alpha^t + 1
// lands in class r, and X_i(t) = i at the single t where alpha^t + 1 = 0
// (t = (q-1)/2 in odd characteristic, t = 0 in characteristic 2).
inline sequence_set gen_cyclotomic_b(std::uint32_t q, std::uint32_t m) {
    if (q < 3) throw invalid_param("cyclotomic-b needs a prime power q >= 3");
    field_context ctx = build_field(q);
    if (m < 2 || (q - 1) % m != 0) throw invalid_param("cyclotomic-b needs M >= 2 dividing q-1");
    cyclotomic_scheme s = build_scheme(ctx, m);
    sequence_set set;
    set.prov.construction = "cyclotomic_b";
    set.prov.params = {{"q", q}, {"p", ctx.p}, {"n", ctx.n}, {"m", m}, {"f", (q - 1) / m}};
    if (ctx.p == 2) set.prov.notes.push_back("characteristic 2: alpha^t + 1 vanishes at t = 0");
    const std::uint32_t len = q - 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        sequence x;
        x.alphabet_size = m;
        x.symbols.resize(len);
        for (std::uint32_t t = 0; t < len; ++t) {
            std::uint32_t y = ctx.add(ctx.exp_table[t], 1);
            x.symbols[t] = y == 0 ? i : (s.class_of[y] + i) % m;
        }
        set.sequences.push_back(std::move(x));
    }
    return set;
}

// Bijective re-arrangement of an (N, L) array of cells into an (N', L') array
// with N*L = N'*L'. cells[j*target_n + s] names the source cell (i, t).
struct interleave_map {
    std::uint32_t source_n = 0, source_l = 0;
    std::uint32_t target_n = 0, target_l = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> cells;

    void validate() const {
        if (static_cast<std::uint64_t>(source_n) * source_l != static_cast<std::uint64_t>(target_n) * target_l)
            throw shape_mismatch("interleave map must conserve N*L");
        if (cells.size() != static_cast<std::size_t>(target_n) * target_l)
            throw not_bijective("interleave map must cover every target cell");
        std::vector<bool> seen(cells.size(), false);
        for (const auto& [i, t] : cells) {
            if (i >= source_l || t >= source_n) throw not_bijective("interleave map leaves the source grid");
            std::size_t idx = static_cast<std::size_t>(i) * source_n + t;
            if (seen[idx]) throw not_bijective("interleave map repeats a source cell");
            seen[idx] = true;
        }
    }
};

inline interleave_map identity_map(std::uint32_t n, std::uint32_t l) {
    interleave_map map;
    map.source_n = map.target_n = n;
    map.source_l = map.target_l = l;
    map.cells.reserve(static_cast<std::size_t>(n) * l);
    for (std::uint32_t j = 0; j < l; ++j)
        for (std::uint32_t s = 0; s < n; ++s) map.cells.emplace_back(j, s);
    return map;
}

// Y_i(k*t1 + t0) = X_{k*i + t0}(t1): weaves k consecutive source sequences
// into one of length k*N; needs k | L.
inline interleave_map construction_c_map(std::uint32_t n, std::uint32_t l, std::uint32_t k) {
    if (k < 1 || k > l || l % k != 0) throw invalid_param("construction C needs 1 <= k <= L with k | L");
    interleave_map map;
    map.source_n = n;
    map.source_l = l;
    map.target_n = k * n;
    map.target_l = l / k;
    map.cells.reserve(static_cast<std::size_t>(n) * l);
    for (std::uint32_t i = 0; i < map.target_l; ++i) {
        for (std::uint32_t s = 0; s < map.target_n; ++s) {
            std::uint32_t t0 = s % k;
            std::uint32_t t1 = s / k;
            map.cells.emplace_back(k * i + t0, t1);
        }
    }
    return map;
}

inline sequence_set interleave(const sequence_set& set, const interleave_map& map) {
    validate_set(set);
    if (map.source_n != set.length() || map.source_l != set.size())
        throw shape_mismatch("interleave map shape does not match the set");
    map.validate();
    sequence_set out;
    out.prov = set.prov;
    out.prov.notes.push_back("interleaved to " + std::to_string(map.target_n) + "x" + std::to_string(map.target_l));
    for (std::uint32_t j = 0; j < map.target_l; ++j) {
        sequence y;
        y.alphabet_size = set.alphabet_size();
        y.labels = set.sequences.front().labels;
        y.symbols.resize(map.target_n);
        for (std::uint32_t s = 0; s < map.target_n; ++s) {
            auto [i, t] = map.cells[static_cast<std::size_t>(j) * map.target_n + s];
            y.symbols[s] = set.sequences[i].symbols[t];
        }
        out.sequences.push_back(std::move(y));
    }
    return out;
}

// Construction C with k = 2 applied to the (p, M, M) cyclotomic set; valid
// when M is even and the cofactor f = (p-1)/M is odd. Yields (2p, M, M/2).
inline sequence_set gen_corollary16(std::uint32_t p, std::uint32_t m) {
    if (p < 3 || !is_prime_u64(p)) throw invalid_param("corollary16 needs an odd prime p");
    if (m < 2 || m % 2 != 0 || (p - 1) % m != 0) throw invalid_param("corollary16 needs even M dividing p-1");
    if (((p - 1) / m) % 2 == 0) throw invalid_param("corollary16 needs odd cofactor f = (p-1)/M");
    sequence_set base = gen_cyclotomic_a(p, m);
    sequence_set out = interleave(base, construction_c_map(p, m, 2));
    out.prov.construction = "corollary16";
    out.prov.params = {{"p", p}, {"m", m}, {"f", (p - 1) / m}};
    out.prov.notes.clear();
    return out;
}

// Base multiplicative set over Z_N: X_i(t) = <(i+1) t>_N for 0 <= i <= p1-2,
// where p1 is the smallest prime factor of the odd modulus N.
inline sequence_set gen_multiplicative(std::uint32_t n_mod) {
    if (n_mod < 3 || n_mod % 2 == 0) throw invalid_param("multiplicative needs an odd modulus N >= 3");
    auto fs = factorize(n_mod);
    const std::uint32_t p1 = static_cast<std::uint32_t>(fs.front().first);
    sequence_set set;
    set.prov.construction = "multiplicative";
    set.prov.params = {{"n", n_mod}, {"p1", p1}};
    for (std::uint32_t i = 0; i + 1 < p1; ++i) {
        sequence x;
        x.alphabet_size = n_mod;
        x.symbols.resize(n_mod);
        for (std::uint32_t t = 0; t < n_mod; ++t)
            x.symbols[t] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(i + 1) * t % n_mod);
        set.sequences.push_back(std::move(x));
    }
    return set;
}

// Construction C over the multiplicative base set: k | p1 - 1 source
// sequences weave into each output, giving a (kN, N, (p1-1)/k) set. k = 1
// returns the base set unchanged.
inline sequence_set gen_theorem17(std::uint32_t n_mod, std::uint32_t k) {
    sequence_set base = gen_multiplicative(n_mod);
    const std::uint32_t l0 = base.size(); // p1 - 1
    if (k < 1 || l0 % k != 0) throw invalid_param("theorem17 needs k >= 1 dividing p1-1");
    sequence_set out = interleave(base, construction_c_map(n_mod, l0, k));
    out.prov.construction = "theorem17";
    out.prov.params = {{"n", n_mod}, {"k", k}, {"p1", l0 + 1}, {"l", l0 / k}};
    out.prov.notes.clear();
    return out;
}

// Parameter record for the CLI and the report plumbing.
struct construction_spec {
    std::string name;
    std::int64_t p = 0, q = 0, m = 0, n = 0, d = 0, k = 0;
};

inline sequence_set generate(const construction_spec& c) {
    auto u32 = [](std::int64_t v, const char* what) {
        if (v <= 0 || v > 0x7fffffff) throw invalid_param(std::string("parameter ") + what + " out of range");
        return static_cast<std::uint32_t>(v);
    };
    if (c.name == "kumar") return gen_kumar(u32(c.p, "p"));
    if (c.name == "nhz") return gen_nhz(u32(c.k, "k"), u32(c.n, "n"), u32(c.d, "d"));
    if (c.name == "p2p") return gen_p2p(u32(c.p, "p"));
    if (c.name == "cyclotomic_a" || c.name == "cyclotomic-a") return gen_cyclotomic_a(u32(c.p, "p"), u32(c.m, "m"));
    if (c.name == "cyclotomic_b" || c.name == "cyclotomic-b") return gen_cyclotomic_b(u32(c.q, "q"), u32(c.m, "m"));
    if (c.name == "corollary16") return gen_corollary16(u32(c.p, "p"), u32(c.m, "m"));
    if (c.name == "multiplicative") return gen_multiplicative(u32(c.n, "n"));
    if (c.name == "theorem17") return gen_theorem17(u32(c.n, "n"), u32(c.k, "k"));
    throw invalid_param("unknown construction: " + c.name);
}

} // namespace fhs
