#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hgsat {

using i64 = long long;
using i128 = __int128;
using u128 = unsigned __int128;

/// Thrown when an exact computation would leave the supported integer range.
/// Guards never degrade to approximation silently.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline i64 checked_i64(i128 v, const char* what) {
    if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
        throw GuardError(std::string(what) + ": exceeds 64-bit range");
    return static_cast<i64>(v);
}

inline u128 gcd_u128(u128 a, u128 b) {
    while (b) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// Exact rational over 64-bit integers, kept normalized (den > 0, gcd 1).
/// Every comparison that feeds a verdict goes through exact cross
/// multiplication; decimal values are advisory output only.
struct Rat {
    i64 num = 0;
    i64 den = 1;

    Rat() = default;
    Rat(i64 n) : num(n), den(1) {}
    Rat(i64 n, i64 d) {
        if (d == 0) throw std::invalid_argument("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        i64 g = std::gcd(n < 0 ? -n : n, d);
        if (g == 0) g = 1;
        num = n / g;
        den = d / g;
    }

    static Rat from_i128(i128 n, i128 d) {
        if (d == 0) throw std::invalid_argument("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        u128 an = n < 0 ? static_cast<u128>(-n) : static_cast<u128>(n);
        u128 g = gcd_u128(an, static_cast<u128>(d));
        if (g == 0) g = 1;
        return Rat(checked_i64(n / static_cast<i128>(g), "rational numerator"),
                   checked_i64(d / static_cast<i128>(g), "rational denominator"));
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return from_i128(static_cast<i128>(a.num) * b.den + static_cast<i128>(b.num) * a.den,
                         static_cast<i128>(a.den) * b.den);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return from_i128(static_cast<i128>(a.num) * b.den - static_cast<i128>(b.num) * a.den,
                         static_cast<i128>(a.den) * b.den);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return from_i128(static_cast<i128>(a.num) * b.num,
                         static_cast<i128>(a.den) * b.den);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw std::invalid_argument("rational division by zero");
        return from_i128(static_cast<i128>(a.num) * b.den,
                         static_cast<i128>(a.den) * b.num);
    }
    Rat operator-() const { return Rat(-num, den); }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rat& a, const Rat& b) {
        return static_cast<i128>(a.num) * b.den < static_cast<i128>(b.num) * a.den;
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return a == b || a < b; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
    double approx() const { return static_cast<double>(num) / static_cast<double>(den); }
};

inline Rat rat_pow(Rat base, int e) {
    if (e < 0) throw std::invalid_argument("rat_pow: negative exponent");
    Rat r(1);
    while (e-- > 0) r = r * base;
    return r;
}

inline u128 checked_pow_u128(u128 x, int e, const char* what) {
    u128 r = 1;
    for (int i = 0; i < e; ++i) {
        if (x != 0 && r > ~u128{0} / x)
            throw GuardError(std::string(what) + ": power exceeds 128-bit range");
        r *= x;
    }
    return r;
}

inline u128 checked_mul_u128(u128 a, u128 b, const char* what) {
    if (a != 0 && b > ~u128{0} / a)
        throw GuardError(std::string(what) + ": product exceeds 128-bit range");
    return a * b;
}

/// Exact test of (x/a)^(1/i) <= (y/b)^(1/j) for nonnegative x, y and positive
/// a, b, i, j: cross-powered to x^j * b^i <= y^i * a^j, no floating point.
inline bool root_leq(i64 x, i64 a, int i, i64 y, i64 b, int j) {
    if (x < 0 || y < 0 || a <= 0 || b <= 0 || i < 1 || j < 1)
        throw std::invalid_argument("root_leq: arguments out of domain");
    u128 lhs = checked_mul_u128(checked_pow_u128(static_cast<u128>(x), j, "root_leq"),
                                checked_pow_u128(static_cast<u128>(b), i, "root_leq"),
                                "root_leq");
    u128 rhs = checked_mul_u128(checked_pow_u128(static_cast<u128>(y), i, "root_leq"),
                                checked_pow_u128(static_cast<u128>(a), j, "root_leq"),
                                "root_leq");
    return lhs <= rhs;
}

inline i64 binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    i128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return checked_i64(r, "binomial");
}

} // namespace hgsat
