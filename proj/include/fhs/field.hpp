#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fhs/errors.hpp"

namespace fhs {

// Dense exponent/discrete-log tables stay affordable up to this group order.
inline constexpr std::uint64_t max_group_order = 1u << 20; // q - 1 <= 2^20

inline bool is_prime_u64(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

inline std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t v) {
    std::vector<std::pair<std::uint64_t, int>> fs;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            int e = 0;
            while (v % d == 0) {
                v /= d;
                ++e;
            }
            fs.emplace_back(d, e);
        }
    }
    if (v > 1) fs.emplace_back(v, 1);
    return fs;
}

namespace detail {

// Polynomials over GF(p), coefficients low-degree-first, no trailing zeros.
using poly = std::vector<std::uint32_t>;

inline poly poly_trim(poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

inline poly poly_rem(poly a, const poly& b, std::uint32_t p) {
    // b monic, nonzero degree
    while (a.size() >= b.size()) {
        std::uint32_t c = a.back();
        if (c != 0) {
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) {
                std::uint64_t sub = static_cast<std::uint64_t>(c) * b[i] % p;
                a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
            }
        }
        a.pop_back();
        a = poly_trim(std::move(a));
        if (a.size() < b.size()) break;
    }
    return poly_trim(std::move(a));
}

inline poly poly_mul_mod(const poly& a, const poly& b, const poly& mod, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
    return poly_rem(std::move(prod), mod, p);
}

inline poly poly_pow_mod(poly base, std::uint64_t e, const poly& mod, std::uint32_t p) {
    poly r{1};
    base = poly_rem(std::move(base), mod, p);
    while (e != 0) {
        if (e & 1) r = poly_mul_mod(r, base, mod, p);
        base = poly_mul_mod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

// Trial division by every monic polynomial of degree <= deg(f)/2.
inline bool poly_irreducible(const poly& f, std::uint32_t p) {
    std::size_t n = f.size() - 1;
    for (std::size_t d = 1; d <= n / 2; ++d) {
        poly div(d + 1, 0);
        div[d] = 1;
        // odometer over the d low coefficients
        while (true) {
            if (poly_rem(f, div, p).empty()) return false;
            std::size_t k = 0;
            while (k < d && div[k] == p - 1) {
                div[k] = 0;
                ++k;
            }
            if (k == d) break;
            ++div[k];
        }
    }
    return true;
}

} // namespace detail

// Arithmetic context for GF(p^n) with a fixed primitive element and full
// exponent/discrete-log tables. Elements of GF(p^n) are packed as integers in
// [0, q) via base-p coefficient digits (low digit = constant term). Immutable
// once built; safe to share across threads.
class field_context {
public:
    std::uint32_t p = 0;
    std::uint32_t n = 1;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus; // n+1 low-first coefficients; empty when n == 1
    std::uint32_t alpha = 0;
    std::vector<std::uint32_t> exp_table; // exp_table[l] = alpha^l, size q-1
    std::vector<std::uint32_t> dlog;      // dlog[x] for x != 0; dlog[0] = sentinel

    static constexpr std::uint32_t no_dlog = 0xffffffffu;

    std::uint32_t group_order() const { return q - 1; }

    std::uint32_t dlog_of(std::uint32_t x) const {
        if (x == 0 || x >= q) throw division_by_zero("dlog of zero or out-of-range element");
        return dlog[x];
    }

    std::uint32_t exp_of(std::uint64_t l) const { return exp_table[l % group_order()]; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (n == 1) return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) + b) % p);
        std::uint32_t r = 0;
        std::uint32_t place = 1;
        for (std::uint32_t i = 0; i < n; ++i) {
            std::uint32_t da = a % p, db = b % p;
            a /= p;
            b /= p;
            r += ((da + db) % p) * place;
            place *= p;
        }
        return r;
    }

    std::uint32_t neg(std::uint32_t a) const {
        if (n == 1) return a == 0 ? 0 : p - a;
        std::uint32_t r = 0;
        std::uint32_t place = 1;
        for (std::uint32_t i = 0; i < n; ++i) {
            std::uint32_t d = a % p;
            a /= p;
            r += (d == 0 ? 0 : p - d) * place;
            place *= p;
        }
        return r;
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        std::uint64_t l = static_cast<std::uint64_t>(dlog[a]) + dlog[b];
        return exp_table[l % group_order()];
    }

    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw division_by_zero("inverse of zero");
        std::uint32_t l = dlog[a];
        return exp_table[(group_order() - l) % group_order()];
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        if (a == 0) return e == 0 ? 1 : 0;
        std::uint64_t l = static_cast<std::uint64_t>(dlog[a]) * (e % group_order()) % group_order();
        return exp_table[l];
    }

    std::vector<std::uint32_t> unpack(std::uint32_t x) const {
        std::vector<std::uint32_t> d(n);
        for (std::uint32_t i = 0; i < n; ++i) {
            d[i] = x % p;
            x /= p;
        }
        return d;
    }
};

// mul without the dlog tables, used only while building them.
inline std::uint32_t field_context_mul_raw(const field_context& ctx, std::uint32_t a, std::uint32_t b) {
    if (ctx.n == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % ctx.p);
    detail::poly pa = detail::poly_trim(ctx.unpack(a));
    detail::poly pb = detail::poly_trim(ctx.unpack(b));
    detail::poly pr = detail::poly_mul_mod(pa, pb, ctx.modulus, ctx.p);
    std::uint32_t r = 0;
    std::uint32_t place = 1;
    for (std::uint32_t i = 0; i < ctx.n; ++i) {
        if (i < pr.size()) r += pr[i] * place;
        place *= ctx.p;
    }
    return r;
}

inline field_context build_prime_field(std::uint32_t p) {
    if (!is_prime_u64(p)) throw not_prime("not a prime: " + std::to_string(p));
    if (static_cast<std::uint64_t>(p) - 1 > max_group_order)
        throw too_large("field order exceeds table limit: " + std::to_string(p));

    field_context ctx;
    ctx.p = p;
    ctx.n = 1;
    ctx.q = p;

    if (p == 2) {
        ctx.alpha = 1;
    } else {
        auto fs = factorize(p - 1);
        for (std::uint32_t g = 2; g < p; ++g) {
            bool primitive = true;
            for (const auto& [r, e] : fs) {
                (void)e;
                std::uint64_t x = 1, b = g, ex = (p - 1) / r;
                while (ex != 0) {
                    if (ex & 1) x = x * b % p;
                    b = b * b % p;
                    ex >>= 1;
                }
                if (x == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) {
                ctx.alpha = g;
                break;
            }
        }
    }

    const std::uint32_t order = p - 1;
    ctx.exp_table.assign(order, 0);
    ctx.dlog.assign(p, field_context::no_dlog);
    std::uint64_t cur = 1;
    for (std::uint32_t l = 0; l < order; ++l) {
        ctx.exp_table[l] = static_cast<std::uint32_t>(cur);
        ctx.dlog[cur] = l;
        cur = cur * ctx.alpha % p;
    }
    return ctx;
}

// Modulus choice: the lexicographically smallest monic irreducible polynomial
// (coefficients compared low-degree-first) whose residue class of x is a
// primitive element. That pins every downstream table and file byte-for-byte.
inline field_context build_extension_field(std::uint32_t p, std::uint32_t n) {
    if (!is_prime_u64(p)) throw not_prime("not a prime: " + std::to_string(p));
    if (n < 2) throw invalid_param("extension degree must be >= 2");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        q *= p;
        if (q - 1 > max_group_order) throw too_large("field order exceeds table limit");
    }

    field_context ctx;
    ctx.p = p;
    ctx.n = n;
    ctx.q = static_cast<std::uint32_t>(q);

    auto fs = factorize(q - 1);
    detail::poly x{0, 1};

    std::vector<std::uint32_t> coeffs(n, 0); // low-first candidate coefficients
    bool found = false;
    while (!found) {
        detail::poly f(coeffs.begin(), coeffs.end());
        f.push_back(1); // monic x^n
        if (detail::poly_irreducible(f, p)) {
            bool primitive = true;
            for (const auto& [r, e] : fs) {
                (void)e;
                detail::poly xe = detail::poly_pow_mod(x, (q - 1) / r, f, p);
                if (xe.size() == 1 && xe[0] == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) {
                ctx.modulus = f;
                found = true;
                break;
            }
        }
        // next tuple in (c0, c1, ...) lexicographic order: c0 is most significant
        std::size_t k = n;
        while (k > 0 && coeffs[k - 1] == p - 1) {
            coeffs[k - 1] = 0;
            --k;
        }
        if (k == 0) break;
        ++coeffs[k - 1];
    }
    if (!found) throw invalid_param("no primitive modulus found"); // unreachable for prime p

    ctx.alpha = p; // the class of x packs to digit 1 in place p^1

    const std::uint32_t order = ctx.q - 1;
    ctx.exp_table.assign(order, 0);
    ctx.dlog.assign(ctx.q, field_context::no_dlog);
    std::uint32_t cur = 1;
    for (std::uint32_t l = 0; l < order; ++l) {
        ctx.exp_table[l] = cur;
        ctx.dlog[cur] = l;
        cur = field_context_mul_raw(ctx, cur, ctx.alpha);
    }
    return ctx;
}

// Factor q and dispatch; q must be a prime power with q-1 within table limits.
inline field_context build_field(std::uint32_t q) {
    auto fs = factorize(q);
    if (fs.size() != 1) throw invalid_param("not a prime power: " + std::to_string(q));
    auto [p, e] = fs[0];
    if (e == 1) return build_prime_field(static_cast<std::uint32_t>(p));
    return build_extension_field(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e));
}

enum class field_op_kind { add, mul, inv, pow };

inline std::uint32_t field_op(const field_context& ctx, field_op_kind op, std::uint32_t a, std::uint64_t b = 0) {
    switch (op) {
    case field_op_kind::add: return ctx.add(a, static_cast<std::uint32_t>(b));
    case field_op_kind::mul: return ctx.mul(a, static_cast<std::uint32_t>(b));
    case field_op_kind::inv: return ctx.inv(a);
    case field_op_kind::pow: return ctx.pow(a, b);
    }
    throw invalid_param("unknown field op");
}

} // namespace fhs
