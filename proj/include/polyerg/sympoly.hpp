#pragma once

#include <complex>
#include <vector>

#include "polyerg/affine.hpp"
#include "polyerg/polynomial.hpp"
#include "polyerg/symbolic.hpp"

namespace polyerg {

/// Polynomial in n with SymbolicReal coefficients, monomial basis. Products
/// only ever happen against integer polynomials, so coefficients stay exact
/// rational combinations of the basis irrationals.
class SymPoly {
  public:
    SymPoly() = default;
    explicit SymPoly(std::vector<SymbolicReal> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static SymPoly constant(SymbolicReal v) { return SymPoly({std::move(v)}); }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const SymbolicReal& coeff(std::size_t j) const {
        static const SymbolicReal zero;
        return j < c_.size() ? c_[j] : zero;
    }

    SymPoly& operator+=(const SymPoly& o);
    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    SymPoly operator*(const Rat& s) const;

    /// this(p(n)) for an integer polynomial p; exact.
    SymPoly compose_int(const IntPolynomial& p) const;

    SymbolicReal evaluate(const Int& n) const;

    bool operator==(const SymPoly& o) const { return c_ == o.c_; }

  private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<SymbolicReal> c_;
};

/// C(n, j) expanded into the monomial basis, exact rational coefficients.
std::vector<Rat> binomial_basis_poly(std::size_t j);

/// Phase polynomial n -> frequency . (T^n x) for the orbit of an affine map,
/// with symbolic initial point x.
SymPoly character_phase(const OrbitPolynomial& orbit, const Character& chi,
                        const std::vector<SymbolicReal>& x);

/// Exact uniform Cesaro limit of the averages of e(P(n)). Zero as soon as a
/// nonconstant coefficient is irrational; otherwise the exact average over
/// one period of the rational part, rotated by the constant term.
std::complex<double> phase_limit(const SymPoly& P, const IrrationalBasis& basis = IrrationalBasis::standard());

/// e(x) for symbolic x, through the exact fractional part.
std::complex<double> unit_phase(const SymbolicReal& x, const IrrationalBasis& basis = IrrationalBasis::standard());

}  // namespace polyerg
