#pragma once

#include <cstddef>
#include <vector>

#include "polyerg/arith.hpp"

namespace polyerg {

/// Dense rational matrix, row major. Just enough linear algebra for the
/// classifier and the span calculus: RREF, rank, nullspace.
class QMatrix {
  public:
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    /// In-place reduced row echelon form; returns pivot column indices.
    std::vector<std::size_t> rref();

    std::size_t rank() const {
        QMatrix tmp(*this);
        return tmp.rref().size();
    }

    /// Basis of the right nullspace, one vector per free column, produced by
    /// the standard RREF parameterization (deterministic).
    std::vector<std::vector<Rat>> nullspace() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

/// Scales a rational vector to a primitive integer vector whose first
/// nonzero entry is positive. Zero vector maps to itself.
std::vector<Int> primitive_integer_vector(const std::vector<Rat>& v);

/// Row-space equality test for two sets of rational vectors of equal width.
bool same_row_space(const std::vector<std::vector<Rat>>& a, const std::vector<std::vector<Rat>>& b,
                    std::size_t width);

}  // namespace polyerg
