#pragma once

#include <cstdint>
#include <vector>

#include "fhs/errors.hpp"
#include "fhs/field.hpp"

namespace fhs {

// Partition of the nonzero elements of GF(q) into M cosets of the index-M
// subgroup, C_r = { alpha^(M*l + r) }, together with the M x M table
// number(i, j) = |(C_i + 1) n C_j|. Row/column indices wrap mod M. The zero
// element belongs to no class and is never counted.
class cyclotomic_scheme {
public:
    std::uint32_t q = 0;
    std::uint32_t m = 0;
    std::uint32_t f = 0;                  // class size, q = m*f + 1
    std::vector<std::uint32_t> class_of;  // size q; class_of[0] = sentinel
    std::vector<std::uint32_t> numbers;   // m*m row-major

    static constexpr std::uint32_t no_class = 0xffffffffu;

    std::uint32_t number(std::uint64_t i, std::uint64_t j) const {
        return numbers[(i % m) * m + (j % m)];
    }
};

inline cyclotomic_scheme build_scheme(const field_context& ctx, std::uint32_t m) {
    if (m < 2 || (ctx.q - 1) % m != 0)
        throw not_divisor("class count " + std::to_string(m) + " does not divide " + std::to_string(ctx.q - 1));

    cyclotomic_scheme s;
    s.q = ctx.q;
    s.m = m;
    s.f = (ctx.q - 1) / m;
    s.class_of.assign(ctx.q, cyclotomic_scheme::no_class);
    for (std::uint32_t x = 1; x < ctx.q; ++x) s.class_of[x] = ctx.dlog[x] % m;

    s.numbers.assign(static_cast<std::size_t>(m) * m, 0);
    for (std::uint32_t x = 1; x < ctx.q; ++x) {
        std::uint32_t y = ctx.add(x, 1);
        if (y == 0) continue;
        ++s.numbers[static_cast<std::size_t>(s.class_of[x]) * m + s.class_of[y]];
    }
    return s;
}

// Row sums sum_i number(i+j, i): f-1 on the zero diagonal shift, f otherwise.
inline std::vector<bool> verify_lemma11(const cyclotomic_scheme& s) {
    std::vector<bool> ok(s.m);
    for (std::uint32_t j = 0; j < s.m; ++j) {
        std::uint64_t sum = 0;
        for (std::uint32_t i = 0; i < s.m; ++i) sum += s.number(i + j, i);
        ok[j] = sum == (j == 0 ? s.f - 1 : s.f);
    }
    return ok;
}

// Same sums computed straight from the field, without the M x M table; the
// sweep tests use this as the cross-check route for large q.
inline std::vector<bool> verify_lemma11_direct(const field_context& ctx, std::uint32_t m) {
    if (m < 2 || (ctx.q - 1) % m != 0) throw not_divisor("class count does not divide group order");
    const std::uint32_t f = (ctx.q - 1) / m;
    std::vector<std::uint64_t> hist(m, 0);
    for (std::uint32_t x = 1; x < ctx.q; ++x) {
        std::uint32_t y = ctx.add(x, 1);
        if (y == 0) continue;
        std::uint32_t cx = ctx.dlog[x] % m;
        std::uint32_t cy = ctx.dlog[y] % m;
        ++hist[(cx + m - cy) % m]; // j with x in C_{i+j}, x+1 in C_i
    }
    std::vector<bool> ok(m);
    for (std::uint32_t j = 0; j < m; ++j) ok[j] = hist[j] == (j == 0 ? f - 1 : f);
    return ok;
}

// True iff number(2l, l) == 0 for every l in Z_M.
inline bool theorem13_condition(const cyclotomic_scheme& s) {
    for (std::uint32_t l = 0; l < s.m; ++l)
        if (s.number(2ull * l, l) != 0) return false;
    return true;
}

} // namespace fhs
