#pragma once

#include <cstdint>
#include <stdexcept>

#include "geodex/bigint.hpp"

namespace geodex {
namespace detail {

inline int jacobi_symbol(BigInt a, BigInt n) {
    // n odd positive
    a %= n;
    if (a < 0) a += n;
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            BigInt r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

inline bool is_perfect_square(const BigInt& n) {
    if (n < 0) return false;
    BigInt r = boost::multiprecision::sqrt(n);
    return r * r == n;
}

inline bool miller_rabin_base2(const BigInt& n) {
    // n odd, n > 2
    BigInt d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    BigInt x = boost::multiprecision::powm(BigInt(2), d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

// Strong Lucas probable-prime test with Selfridge's method A parameters.
inline bool strong_lucas(const BigInt& n) {
    // Find D in 5, -7, 9, -11, ... with jacobi(D, n) == -1.
    BigInt d_param = 5;
    while (true) {
        int j = jacobi_symbol(d_param, n);
        if (j == -1) break;
        if (j == 0 && boost::multiprecision::abs(d_param) != n) return false;  // proper factor found
        if (d_param > 0)
            d_param = -(d_param + 2);
        else
            d_param = -(d_param - 2);
        if (boost::multiprecision::abs(d_param) > 1000000)
            throw std::runtime_error("strong_lucas: no suitable D (perfect square not filtered?)");
    }
    const BigInt q_param = (1 - d_param) / 4;  // P = 1

    BigInt d = n + 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }

    auto mod = [&](BigInt v) {
        v %= n;
        if (v < 0) v += n;
        return v;
    };
    const BigInt inv2 = (n + 1) / 2;  // inverse of 2 modulo odd n

    // Binary ladder for U_d, V_d, Q^d (most significant bit first).
    BigInt u = 1, v = 1, qk = mod(q_param);  // U_1, V_1, Q^1
    int bits = 0;
    for (BigInt t = d; t > 1; t /= 2) ++bits;
    for (int i = bits - 1; i >= 0; --i) {
        // double: (U,V)_k -> (U,V)_{2k}
        u = mod(u * v);
        v = mod(v * v - 2 * qk);
        qk = mod(qk * qk);
        if (boost::multiprecision::bit_test(d, static_cast<unsigned>(i))) {
            // increment: (U,V)_{2k} -> (U,V)_{2k+1} with P = 1
            BigInt nu = mod((u + v) * inv2);
            BigInt nv = mod((d_param * u + v) * inv2);
            u = nu;
            v = nv;
            qk = mod(qk * q_param);
        }
    }

    if (u == 0 || v == 0) return true;  // U_d == 0 or V_d == 0
    for (int r = 1; r < s; ++r) {
        v = mod(v * v - 2 * qk);
        qk = mod(qk * qk);
        if (v == 0) return true;  // V_{d*2^r} == 0
    }
    return false;
}

}  // namespace detail

// Baillie-PSW: trial division, Miller-Rabin base 2, then a strong Lucas test.
// No composite passing this combination is known; callers that certify
// infeasibility record the method name alongside the verdict.
inline bool is_probable_prime_bpsw(const BigInt& n) {
    if (n < 2) return false;
    static const int small_primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                       43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    for (int p : small_primes) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (detail::is_perfect_square(n)) return false;
    if (!detail::miller_rabin_base2(n)) return false;
    return detail::strong_lucas(n);
}

inline const char* primality_method_name() { return "baillie-psw"; }

}  // namespace geodex
