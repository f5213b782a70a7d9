#pragma once

#include <map>
#include <vector>

#include "polyerg/polynomial.hpp"
#include "polyerg/qmatrix.hpp"
#include "polyerg/symbolic.hpp"

namespace polyerg {

/// Vector polynomial u: N -> T^m decomposed as u0(n) q + sum_i u_i(n) a_i
/// over the declared irrational basis; each u_i is an m-vector of integer
/// polynomials. Only the irrational terms matter for density.
struct VectorPolynomial {
    std::size_t dim;                                       // m
    std::map<std::size_t, std::vector<IntPolynomial>> irr; // basis index -> coordinate polynomials
    std::vector<IntPolynomial> rational_term;              // optional; empty means zero

    /// u(p(n)): composes every coordinate polynomial with p.
    VectorPolynomial substitute(const IntPolynomial& p) const;
};

struct SpanDescriptor {
    std::size_t dim;
    std::vector<std::vector<Rat>> basis;  // RREF rows spanning the rational subspace
    std::size_t rank() const { return basis.size(); }
    bool dense() const { return rank() == dim; }
    bool operator==(const SpanDescriptor& o) const { return dim == o.dim && basis == o.basis; }
};

/// Rational span of all coefficient vectors of the irrational terms; the
/// orbit closure is the whole torus exactly when this span is Q^m.
SpanDescriptor span_closure(const VectorPolynomial& u);

/// Checks span_closure(u o p) == span_closure(u) for nonconstant p; the
/// substitution never changes the span, so this returns the verification
/// result rather than assuming it.
bool substitution_invariance(const VectorPolynomial& u, const IntPolynomial& p);

/// Whether {(n beta, u(p(n)))} fills T^{m+1}: needs deg p > 1 and the
/// substituted span to be dense.
bool product_density(const SymbolicReal& beta, const VectorPolynomial& u, const IntPolynomial& p);

}  // namespace polyerg
