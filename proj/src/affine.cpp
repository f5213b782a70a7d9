#include "polyerg/affine.hpp"

namespace polyerg {

void UnipotentAffineMap::validate() const {
    if (N.size() != dim || b.size() != dim) throw ArgumentError("affine map: dimension mismatch");
    for (std::size_t i = 0; i < dim; ++i) {
        if (N[i].size() != dim) throw ArgumentError("affine map: dimension mismatch");
        for (std::size_t j = i; j < dim; ++j)
            if (N[i][j] != 0) throw ArgumentError("affine map: N must be strictly lower triangular");
    }
}

bool UnipotentAffineMap::quasi_standard() const {
    if (dim == 0 || !b[0].is_irrational()) return false;
    for (std::size_t i = 1; i < dim; ++i)
        if (N[i][i - 1] == 0) return false;
    return true;
}

std::vector<SymbolicReal> UnipotentAffineMap::apply(const std::vector<SymbolicReal>& x) const {
    std::vector<SymbolicReal> y(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        y[i] = x[i] + b[i];
        for (std::size_t k = 0; k < i; ++k)
            if (N[i][k] != 0) y[i] += x[k] * Rat(N[i][k]);
    }
    return y;
}

namespace {

std::vector<std::vector<Int>> mat_mul(const std::vector<std::vector<Int>>& a,
                                      const std::vector<std::vector<Int>>& b) {
    std::size_t d = a.size();
    std::vector<std::vector<Int>> r(d, std::vector<Int>(d, Int(0)));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < d; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

std::vector<SymbolicReal> mat_vec(const std::vector<std::vector<Int>>& a, const std::vector<SymbolicReal>& v) {
    std::vector<SymbolicReal> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a[i][j] != 0) r[i] += v[j] * Rat(a[i][j]);
    return r;
}

bool is_zero_mat(const std::vector<std::vector<Int>>& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (x != 0) return false;
    return true;
}

}  // namespace

OrbitPolynomial orbit_closed_form(const UnipotentAffineMap& T) {
    T.validate();
    std::size_t d = T.dim;
    OrbitPolynomial orb;
    orb.dim_ = d;

    // A^n = sum_j C(n,j) N^j and sum_{s<n} A^s b = sum_j C(n,j+1) N^j b,
    // so the C(n,j) term carries matrix N^j and translation N^{j-1} b.
    std::vector<std::vector<std::vector<Int>>> npow;
    npow.push_back(std::vector<std::vector<Int>>(d, std::vector<Int>(d, Int(0))));
    for (std::size_t i = 0; i < d; ++i) npow[0][i][i] = 1;  // N^0
    for (std::size_t j = 1; j <= d; ++j) {
        auto next = mat_mul(npow.back(), T.N);
        npow.push_back(next);
        if (is_zero_mat(next)) break;
    }

    std::size_t terms = npow.size();  // includes the trailing zero power if reached
    orb.lin_.resize(terms);
    orb.cst_.resize(terms);
    for (std::size_t j = 0; j < terms; ++j) {
        orb.lin_[j] = j < npow.size() ? npow[j] : std::vector<std::vector<Int>>(d, std::vector<Int>(d, Int(0)));
        if (j == 0)
            orb.cst_[j].assign(d, SymbolicReal());
        else
            orb.cst_[j] = mat_vec(npow[j - 1], T.b);
    }
    return orb;
}

std::vector<SymbolicReal> OrbitPolynomial::evaluate(const Int& n, const std::vector<SymbolicReal>& x) const {
    std::vector<SymbolicReal> y(dim_);
    for (std::size_t j = 0; j < terms(); ++j) {
        Rat c(binom(n, static_cast<unsigned long>(j)));
        if (c == 0) continue;
        for (std::size_t i = 0; i < dim_; ++i) {
            SymbolicReal term = cst_[j][i];
            for (std::size_t k = 0; k < dim_; ++k)
                if (lin_[j][i][k] != 0) term += x[k] * Rat(lin_[j][i][k]);
            y[i] += term * c;
        }
    }
    return y;
}

}  // namespace polyerg
