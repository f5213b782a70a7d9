#pragma once

#include <vector>

#include "polyerg/polynomial.hpp"
#include "polyerg/symbolic.hpp"

namespace polyerg {

/// x -> (I + N) x + b on T^d with N strictly lower triangular integer,
/// so the map is unipotent and N^d = 0.
struct UnipotentAffineMap {
    std::size_t dim;
    std::vector<std::vector<Int>> N;  // d x d, entries above/on the diagonal must be 0
    std::vector<SymbolicReal> b;

    static UnipotentAffineMap rotation(std::vector<SymbolicReal> shift) {
        UnipotentAffineMap t;
        t.dim = shift.size();
        t.N.assign(t.dim, std::vector<Int>(t.dim, Int(0)));
        t.b = std::move(shift);
        return t;
    }

    /// (t, s) -> (t + alpha, s + c*t + beta)
    static UnipotentAffineMap skew2(const SymbolicReal& alpha, const Int& coupling, const SymbolicReal& beta) {
        UnipotentAffineMap t;
        t.dim = 2;
        t.N = {{Int(0), Int(0)}, {coupling, Int(0)}};
        t.b = {alpha, beta};
        return t;
    }

    void validate() const;

    /// b_1 irrational and every subdiagonal coupling N[i][i-1] nonzero.
    bool quasi_standard() const;

    std::vector<SymbolicReal> apply(const std::vector<SymbolicReal>& x) const;
};

/// Character e(frequency . x) on T^d.
struct Character {
    std::vector<Int> frequency;
    bool trivial() const {
        for (const auto& f : frequency)
            if (f != 0) return false;
        return true;
    }
};

/// Exact symbolic orbit: coordinate i of T^n x equals
///   x_i + sum_j C(n,j) * ( (N^j x)_i + (N^{j-1} b)_i ),   j = 1..d.
/// Stored in the binomial basis; the constant binomial term is x itself.
class OrbitPolynomial {
  public:
    std::size_t dim() const { return dim_; }
    std::size_t terms() const { return lin_.size(); }  // number of C(n,j) terms, j=0..terms()-1

    /// Integer matrix multiplying x in the C(n,j) term.
    const std::vector<std::vector<Int>>& linear(std::size_t j) const { return lin_[j]; }
    /// Symbolic translation in the C(n,j) term.
    const std::vector<SymbolicReal>& shift(std::size_t j) const { return cst_[j]; }

    /// Exact evaluation of T^n x.
    std::vector<SymbolicReal> evaluate(const Int& n, const std::vector<SymbolicReal>& x) const;

    friend OrbitPolynomial orbit_closed_form(const UnipotentAffineMap& T);

  private:
    std::size_t dim_ = 0;
    std::vector<std::vector<std::vector<Int>>> lin_;  // [j][i][k]
    std::vector<std::vector<SymbolicReal>> cst_;      // [j][i]
};

OrbitPolynomial orbit_closed_form(const UnipotentAffineMap& T);

}  // namespace polyerg
