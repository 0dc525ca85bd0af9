#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace geodex {

// All counting and certification arithmetic is exact; overflow would silently
// invalidate geodecity certificates, so machine integers are confined to
// vertex indices and moduli.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::lcm(a, b);
}

}  // namespace geodex
