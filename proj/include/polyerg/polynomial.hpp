#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "polyerg/arith.hpp"

namespace polyerg {

/// Integer polynomial in one variable n, dense coefficients by exponent.
/// Arithmetic is exact (arbitrary precision); the coefficient vector never
/// carries trailing zeros, so degree() is the index of the last entry.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static IntPolynomial constant(Int v) { return IntPolynomial({std::move(v)}); }
    static IntPolynomial variable() { return IntPolynomial({Int(0), Int(1)}); }
    // c * n^k
    static IntPolynomial monomial(Int c, std::size_t k) {
        std::vector<Int> v(k + 1, Int(0));
        v[k] = std::move(c);
        return IntPolynomial(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    // Degree of the zero polynomial is -1 by convention.
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    const Int& coeff(std::size_t j) const {
        static const Int zero(0);
        return j < c_.size() ? c_[j] : zero;
    }
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& leading() const { return c_.back(); }

    Int operator()(const Int& x) const {
        Int acc(0);
        for (std::size_t j = c_.size(); j-- > 0;) acc = acc * x + c_[j];
        return acc;
    }
    Rat operator()(const Rat& x) const {
        Rat acc(0);
        for (std::size_t j = c_.size(); j-- > 0;) acc = acc * x + Rat(c_[j]);
        return acc;
    }

    Int constant_term() const { return c_.empty() ? Int(0) : c_[0]; }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
        for (std::size_t j = 0; j < a.c_.size(); ++j) r[j] += a.c_[j];
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[j] += b.c_[j];
        return IntPolynomial(std::move(r));
    }
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
        for (std::size_t j = 0; j < a.c_.size(); ++j) r[j] += a.c_[j];
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[j] -= b.c_[j];
        return IntPolynomial(std::move(r));
    }
    friend IntPolynomial operator-(const IntPolynomial& a) {
        std::vector<Int> r = a.c_;
        for (auto& x : r) x = -x;
        return IntPolynomial(std::move(r));
    }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Int> r(a.c_.size() + b.c_.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return IntPolynomial(std::move(r));
    }
    friend IntPolynomial operator*(const Int& s, const IntPolynomial& a) {
        std::vector<Int> r = a.c_;
        for (auto& x : r) x *= s;
        return IntPolynomial(std::move(r));
    }
    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

    /// p(q(n)), exact.
    IntPolynomial compose(const IntPolynomial& q) const {
        IntPolynomial acc;
        for (std::size_t j = c_.size(); j-- > 0;) acc = acc * q + constant(c_[j]);
        return acc;
    }

    IntPolynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Int> r(c_.size() - 1);
        for (std::size_t j = 1; j < c_.size(); ++j) r[j - 1] = Int(static_cast<long>(j)) * c_[j];
        return IntPolynomial(std::move(r));
    }

    /// GCD of all coefficients (0 for the zero polynomial).
    Int content() const {
        Int g(0);
        for (const auto& x : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        return g;
    }

    std::string str() const;  // human-readable, e.g. "n^2 - 2*n + 1"

  private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;  // c_[j] is the coefficient of n^j
};

/// q(n) = p(r*n + s); requires r >= 1 and 0 <= s < r.
IntPolynomial compose_affine(const IntPolynomial& p, const Int& r, const Int& s);

struct PrimitiveParts {
    int sign;             // +1 or -1
    Int content;          // positive
    IntPolynomial prim;   // coprime coefficients, positive leading coefficient
};

/// p = sign * content * prim. Rejects the zero polynomial.
PrimitiveParts primitive_decompose(const IntPolynomial& p);

/// p with its constant term removed.
IntPolynomial strip_constant(const IntPolynomial& p);

/// Primitive gcd over Z[n] (positive leading coefficient); gcd(0, q) = |q|'s
/// primitive part. Returns the zero polynomial only when both inputs are zero.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Squarefree kernel p / gcd(p, p'), primitive. Same roots, all simple.
IntPolynomial radical(const IntPolynomial& p);

}  // namespace polyerg
