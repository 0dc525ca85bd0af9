#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "geodex/bigint.hpp"

namespace geodex {

// Directed Moore bound M(d,k) = 1 + d + d^2 + ... + d^k, exactly.
inline BigInt moore_bound(long d, long k) {
    if (d < 1 || k < 0) throw std::invalid_argument("moore_bound requires d >= 1, k >= 0");
    BigInt sum = 1, term = 1;
    for (long t = 1; t <= k; ++t) {
        term *= d;
        sum += term;
    }
    return sum;
}

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod_u64(result, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return result;
}

// sum_{t=0}^{k} d^t mod m by halving the range; O(log^2 k) multiplications.
inline std::uint64_t geometric_sum_mod(std::uint64_t d, std::uint64_t k, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t acc = 1 % m;   // multiplies pending (1 + d^h) splits
    std::uint64_t tail = 0;      // collected d^k spillover terms
    while (k > 0) {
        if (k % 2 == 1) {
            std::uint64_t h = (k + 1) / 2;
            acc = mulmod_u64(acc, (1 + powmod_u64(d, h, m)) % m, m);
            k = h - 1;
        } else {
            tail = (tail + mulmod_u64(acc, powmod_u64(d, k, m), m)) % m;
            k -= 1;
        }
    }
    return (tail + acc) % m;
}

}  // namespace detail

// moore_bound(d,k) mod m without bignums; feasible for k up to 10^4 and beyond.
inline std::uint64_t moore_bound_mod(std::uint64_t d, std::uint64_t k, std::uint64_t m) {
    if (m < 1) throw std::invalid_argument("moore_bound_mod requires m >= 1");
    return detail::geometric_sum_mod(d, k, m);
}

// Divisors of n greater than 1 (n itself included), ascending.
inline std::vector<long> nontrivial_divisors(long n) {
    std::vector<long> small, large;
    for (long i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            if (i > 1) small.push_back(i);
            if (i != n / i) large.push_back(n / i);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline std::vector<long> prime_factors(long n) {
    std::vector<long> ps;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

inline long long euler_totient(long long n) {
    long long result = n;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

}  // namespace geodex
