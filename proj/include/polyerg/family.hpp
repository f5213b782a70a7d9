#pragma once

#include <vector>

#include "polyerg/polynomial.hpp"

namespace polyerg {

/// Ordered family of integer polynomials. tilde() members (constant terms
/// removed) are recomputed on access, never stored.
class PolyFamily {
  public:
    PolyFamily() = default;
    explicit PolyFamily(std::vector<IntPolynomial> members) : m_(std::move(members)) {}

    std::size_t size() const { return m_.size(); }
    const IntPolynomial& operator[](std::size_t i) const { return m_[i]; }
    const std::vector<IntPolynomial>& members() const { return m_; }

    std::vector<IntPolynomial> tilde() const {
        std::vector<IntPolynomial> t;
        t.reserve(m_.size());
        for (const auto& p : m_) t.push_back(strip_constant(p));
        return t;
    }

  private:
    std::vector<IntPolynomial> m_;
};

/// True iff every member is nonconstant and every pairwise difference is
/// nonconstant.
bool essentially_distinct(const PolyFamily& f);

/// Rank over Q of the coefficient vectors of the tilde members.
int linear_rank(const PolyFamily& f);

/// {p1 - p3, p2 - p3, -p3}; preserves essential distinctness and Weyl
/// complexity, which makes it a metamorphic oracle for the classifier.
PolyFamily shift_reduce(const PolyFamily& f);

}  // namespace polyerg
