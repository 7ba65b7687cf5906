#pragma once

#include <cstdint>

#include "centro/rational.hpp"

namespace centro {

inline Integer pow_mod(Integer base, Integer exp, const Integer& mod) {
    Integer result = 1;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (boost::multiprecision::bit_test(exp, 0)) result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

namespace detail {

inline bool miller_rabin_witness(const Integer& n, const Integer& d, unsigned r, const Integer& a) {
    Integer x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned i = 1; i < r; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true; // a witnesses compositeness
}

} // namespace detail

// Deterministic for n < 3.3e24 with the 13-prime base set; the handful of
// extra bases keeps the error probability negligible for anything larger
// (determinant magnitudes in this project stay far below that anyway).
inline bool is_prime(const Integer& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Integer d = n - 1;
    unsigned r = 0;
    while (!boost::multiprecision::bit_test(d, 0)) {
        d >>= 1;
        ++r;
    }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79}) {
        if (n == a) return true; // witness bases must be nonzero mod n
        if (detail::miller_rabin_witness(n, d, r, a)) return false;
    }
    return true;
}

inline bool is_prime(std::uint64_t n) { return is_prime(Integer(n)); }

} // namespace centro
