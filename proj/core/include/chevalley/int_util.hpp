#pragma once

#include <cstdint>
#include <numeric>
#include <tuple>
#include <vector>

#include "chevalley/errors.hpp"

namespace chevalley {

inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("overflow in add");
    return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("overflow in sub");
    return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("overflow in mul");
    return r;
}

/// Nonnegative residue of a mod n (n > 0).
inline int64_t floormod(int64_t a, int64_t n) {
    int64_t r = a % n;
    return r < 0 ? r + n : r;
}

/// gcd(a,b) >= 0.
inline int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a, b); }

/// Returns (g, x, y) with a*x + b*y = g = gcd(a,b), g >= 0.
inline std::tuple<int64_t, int64_t, int64_t> egcd(int64_t a, int64_t b) {
    int64_t r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        int64_t q = r0 / r1;
        std::tie(r0, r1) = std::make_tuple(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_tuple(s1, s0 - q * s1);
        std::tie(t0, t1) = std::make_tuple(t1, t0 - q * t1);
    }
    if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
    return {r0, s0, t0};
}

inline bool is_prime_small(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Distinct prime factors of n > 1, ascending.
inline std::vector<int64_t> prime_factors(int64_t n) {
    std::vector<int64_t> ps;
    for (int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

/// Bezout coefficients u with sum u_i*c_i = gcd(c). Throws if all c_i = 0.
inline std::vector<int64_t> bezout_vector(const std::vector<int64_t>& c) {
    std::vector<int64_t> u(c.size(), 0);
    int64_t g = 0;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (g == 0) {
            g = c[i] > 0 ? c[i] : -c[i];
            u[i] = c[i] > 0 ? 1 : -1;
            continue;
        }
        auto [g2, x, y] = egcd(g, c[i]);
        for (size_t j = 0; j < i; ++j) u[j] = checked_mul(u[j], x);
        u[i] = y;
        g = g2;
    }
    if (g == 0) throw Error("bezout_vector: zero vector");
    return u;
}

}  // namespace chevalley
