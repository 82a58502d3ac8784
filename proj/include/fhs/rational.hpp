#pragma once

#include <cstdint>
#include <string>

#include "fhs/errors.hpp"

namespace fhs {

// All correlation sums and bound comparisons run on 128-bit integers with
// explicit overflow checks; nothing in the statistics path touches floating
// point.
using int128 = __int128;

inline int128 checked_add(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow_error("int128 addition overflow");
    return r;
}

inline int128 checked_sub(int128 a, int128 b) {
    int128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("int128 subtraction overflow");
    return r;
}

inline int128 checked_mul(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("int128 multiplication overflow");
    return r;
}

inline std::string int128_str(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    // Divide via unsigned to dodge the INT128_MIN negation pitfall.
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string digits;
    while (u != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) digits.push_back('-');
    return std::string(digits.rbegin(), digits.rend());
}

inline int128 int128_parse(const std::string& s) {
    if (s.empty()) throw invalid_param("empty integer literal");
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw invalid_param("sign without digits: " + s);
    int128 v = 0;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c < '0' || c > '9') throw invalid_param("bad integer literal: " + s);
        v = checked_add(checked_mul(v, 10), c - '0');
    }
    return neg ? -v : v;
}

inline int128 gcd128(int128 a, int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Exact rational with the sign carried by the numerator and the fraction
// always reduced. den == 1 values print as plain integers.
class rational {
public:
    rational() = default;
    rational(int128 n) : num_(n) {} // NOLINT: implicit by design
    rational(int128 n, int128 d) : num_(n), den_(d) { normalize(); }

    int128 num() const { return num_; }
    int128 den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    friend rational operator+(const rational& a, const rational& b) {
        return rational(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                        checked_mul(a.den_, b.den_));
    }
    friend rational operator-(const rational& a, const rational& b) {
        return rational(checked_sub(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                        checked_mul(a.den_, b.den_));
    }
    friend rational operator*(const rational& a, const rational& b) {
        return rational(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
    }
    friend rational operator/(const rational& a, const rational& b) {
        if (b.num_ == 0) throw division_by_zero("rational division by zero");
        return rational(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
    }

    friend bool operator==(const rational& a, const rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const rational& a, const rational& b) { return !(a == b); }
    friend bool operator<(const rational& a, const rational& b) {
        return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
    }
    friend bool operator<=(const rational& a, const rational& b) { return a < b || a == b; }
    friend bool operator>(const rational& a, const rational& b) { return b < a; }
    friend bool operator>=(const rational& a, const rational& b) { return b <= a; }

    std::string str() const {
        if (den_ == 1) return int128_str(num_);
        return int128_str(num_) + "/" + int128_str(den_);
    }

    static rational parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return rational(int128_parse(s));
        return rational(int128_parse(s.substr(0, slash)), int128_parse(s.substr(slash + 1)));
    }

private:
    void normalize() {
        if (den_ == 0) throw division_by_zero("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        int128 g = gcd128(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    int128 num_ = 0;
    int128 den_ = 1;
};

} // namespace fhs
