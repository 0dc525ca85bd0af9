#pragma once

#include <initializer_list>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "geodex/arithmetic.hpp"
#include "geodex/bigint.hpp"
#include "geodex/error.hpp"

namespace geodex {

// Dense integer polynomial, constant term first. Trailing zeros are stripped;
// the zero polynomial has degree -1. All arithmetic is exact.
class IntPolynomial {
public:
    IntPolynomial() = default;

    IntPolynomial(std::initializer_list<long long> coeffs) {
        for (long long c : coeffs) c_.emplace_back(c);
        normalize();
    }

    explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static IntPolynomial constant(BigInt v) { return IntPolynomial(std::vector<BigInt>{std::move(v)}); }

    // coeff * x^deg
    static IntPolynomial monomial(int deg, BigInt coeff = 1) {
        std::vector<BigInt> c(static_cast<std::size_t>(deg) + 1, 0);
        c.back() = std::move(coeff);
        return IntPolynomial(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    const BigInt& coeff(int i) const {
        static const BigInt zero = 0;
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : zero;
    }

    const BigInt& leading() const {
        if (is_zero()) throw Error("zero polynomial has no leading coefficient");
        return c_.back();
    }

    const std::vector<BigInt>& coeffs() const { return c_; }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return IntPolynomial(std::move(c));
    }

    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
        return IntPolynomial(std::move(c));
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return IntPolynomial(std::move(c));
    }

    friend IntPolynomial operator-(const IntPolynomial& a) {
        std::vector<BigInt> c = a.c_;
        for (auto& x : c) x = -x;
        return IntPolynomial(std::move(c));
    }

    // Exact division; throws if the divisor does not divide exactly over Z.
    IntPolynomial divide_exact(const IntPolynomial& divisor) const {
        if (divisor.is_zero()) throw Error("polynomial division by zero");
        std::vector<BigInt> rem = c_;
        int dq = degree() - divisor.degree();
        if (dq < 0) {
            if (is_zero()) return {};
            throw Error("polynomial division with nonzero remainder");
        }
        std::vector<BigInt> q(static_cast<std::size_t>(dq) + 1, 0);
        for (int i = dq; i >= 0; --i) {
            BigInt num = rem[static_cast<std::size_t>(i + divisor.degree())];
            if (num % divisor.leading() != 0)
                throw Error("polynomial division not exact over the integers");
            BigInt qi = num / divisor.leading();
            q[static_cast<std::size_t>(i)] = qi;
            if (qi != 0)
                for (int j = 0; j <= divisor.degree(); ++j)
                    rem[static_cast<std::size_t>(i + j)] -= qi * divisor.coeff(j);
        }
        for (const auto& r : rem)
            if (r != 0) throw Error("polynomial division with nonzero remainder");
        return IntPolynomial(std::move(q));
    }

    IntPolynomial pow(int e) const {
        if (e < 0) throw std::invalid_argument("negative polynomial power");
        IntPolynomial result{1};
        IntPolynomial base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    // Horner composition: returns this(g).
    IntPolynomial compose(const IntPolynomial& g) const {
        IntPolynomial result;
        for (int i = degree(); i >= 0; --i) {
            result = result * g;
            result = result + constant(coeff(i));
        }
        return result;
    }

    BigInt evaluate(const BigInt& x) const {
        BigInt result = 0;
        for (int i = degree(); i >= 0; --i) result = result * x + coeff(i);
        return result;
    }

    // "c0 c1 ... cd"
    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) os << ' ';
            os << c_[i];
        }
        return os.str();
    }

    static IntPolynomial parse(const std::string& text) {
        std::istringstream is(text);
        std::vector<BigInt> c;
        std::string tok;
        while (is >> tok) c.emplace_back(BigInt(tok));
        return IntPolynomial(std::move(c));
    }

    bool operator==(const IntPolynomial& other) const = default;

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

// 1 + x + x^2 + ... + x^k
inline IntPolynomial geometric_poly(int k) {
    if (k < 0) throw std::invalid_argument("geometric_poly requires k >= 0");
    return IntPolynomial(std::vector<BigInt>(static_cast<std::size_t>(k) + 1, 1));
}

// x^n - 1
inline IntPolynomial x_pow_minus_one(int n) {
    auto p = IntPolynomial::monomial(n);
    return p - IntPolynomial{1};
}

// n-th cyclotomic polynomial via exact division of x^n - 1 by Phi_d over the
// proper divisors d of n.
inline IntPolynomial cyclotomic(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic requires n >= 1");
    // Build Phi_d for every divisor d of n in ascending order.
    std::map<long, IntPolynomial> phi;
    std::vector<long> divs{1};
    for (long d : nontrivial_divisors(n)) divs.push_back(d);
    for (long d : divs) {
        IntPolynomial p = x_pow_minus_one(static_cast<int>(d));
        for (long e : divs) {
            if (e < d && d % e == 0) p = p.divide_exact(phi.at(e));
        }
        phi[d] = std::move(p);
    }
    return phi.at(n);
}

// F_{n,k}(x) = Phi_n(1 + x + ... + x^k)
inline IntPolynomial f_poly(long n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("f_poly requires n >= 1, k >= 1");
    return cyclotomic(n).compose(geometric_poly(k));
}

// Power sums p_1..p_rmax of the roots of p via Newton's identities, exactly.
// p must be monic up to sign; a leading -1 is normalized away (same roots).
inline std::vector<BigInt> power_sums(const IntPolynomial& p, int r_max) {
    if (p.degree() < 1) throw std::invalid_argument("power_sums requires degree >= 1");
    IntPolynomial q = p;
    if (q.leading() == -1) q = -q;
    if (q.leading() != 1) throw Error("power_sums requires a monic polynomial (after sign normalization)");

    const int deg = q.degree();
    // q(x) = x^deg + c[1] x^{deg-1} + ... + c[deg]
    std::vector<BigInt> c(static_cast<std::size_t>(deg) + 1);
    for (int i = 1; i <= deg; ++i) c[static_cast<std::size_t>(i)] = q.coeff(deg - i);

    std::vector<BigInt> ps(static_cast<std::size_t>(r_max) + 1, 0);
    for (int r = 1; r <= r_max; ++r) {
        BigInt acc = 0;
        if (r <= deg) acc = c[static_cast<std::size_t>(r)] * r;
        for (int i = 1; i < r && i <= deg; ++i) acc += c[static_cast<std::size_t>(i)] * ps[static_cast<std::size_t>(r - i)];
        ps[static_cast<std::size_t>(r)] = -acc;
    }
    return std::vector<BigInt>(ps.begin() + 1, ps.end());
}

// Multiset of (factor, multiplicity) standing for their product. Factors stay
// symbolic; eigenvalues are never floated.
struct FactoredSpectrum {
    std::vector<std::pair<IntPolynomial, long>> factors;

    long total_degree() const {
        long d = 0;
        for (const auto& [f, m] : factors) d += static_cast<long>(f.degree()) * m;
        return d;
    }

    IntPolynomial expand() const {
        IntPolynomial result{1};
        for (const auto& [f, m] : factors) result = result * f.pow(static_cast<int>(m));
        return result;
    }

    void push(IntPolynomial f, long mult) {
        if (mult < 0) throw Error("negative multiplicity in spectrum");
        if (mult > 0) factors.emplace_back(std::move(f), mult);
    }
};

// Sum of r-th powers of all roots counted with multiplicity: the exact trace
// of the r-th power of any matrix with this characteristic polynomial.
inline BigInt spectrum_trace(const FactoredSpectrum& s, int r) {
    if (r < 1) throw std::invalid_argument("spectrum_trace requires r >= 1");
    BigInt total = 0;
    for (const auto& [f, m] : s.factors) {
        if (f.degree() == 0) continue;  // constant factor contributes no roots
        total += BigInt(m) * power_sums(f, r).back();
    }
    return total;
}

}  // namespace geodex
