#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "polyerg/family.hpp"
#include "polyerg/qmatrix.hpp"

namespace polyerg {

/// Weyl complexity of a family of essentially distinct polynomials;
/// always in {1, 2, 3} for three members.
struct WeylComplexity {
    int value;
};

enum class FamilyTag { LinearlyIndependent, E1, E2, E3, Generic };

std::string to_string(FamilyTag tag);

/// Witness for the detected family form, stated against the primitive base
/// polynomial p. For E1 the members are l*p, m*p, r*p (integers, k unused).
/// For E2 the permuted members are l*p, m*p, k*p^2 + r*p. For E3 they are
/// k*p^2 + l*p, k*p^2 + m*p, k*p^2 + r*p with the same k. Coefficients are
/// rational in general; integer_certified marks the cases where they are all
/// integers, which is exactly when the paper's integral form exists.
struct FamilyWitness {
    IntPolynomial p;
    Rat k{0}, l{0}, m{0}, r{0};
    std::array<int, 3> permutation{0, 1, 2};  // member order exhibiting the form
    bool integer_certified = false;
};

struct FamilyType {
    FamilyTag tag;
    std::optional<FamilyWitness> witness;  // present for E1/E2/E3
};

enum class FactorLabel { KRat, Kronecker, Affine2, Nil2, NilK };

struct FactorClass {
    FactorLabel label;
    int k = 0;  // step, meaningful for NilK
    std::string str() const;
};

/// Primitive integer solution of the two coefficient-matching equations
/// (k1,l1,m1,k2,l2,m2) with (k1,l1,m1) != 0.
struct E12Solution {
    std::array<Int, 6> v;
};

/// Searches the nullspace of the coefficient-matching system
///   k1*p1 + l1*p2 + m1*p3 = 0
///   k1*p1^2 + l1*p2^2 + m1*p3^2 + k2*p1 + l2*p2 + m2*p3 = 0
/// (over the tilde members) for a solution with (k1,l1,m1) != 0.
std::optional<E12Solution> solve_e12_system(const PolyFamily& f);

WeylComplexity weyl_complexity_3(const PolyFamily& f);
WeylComplexity weyl_complexity_2(const PolyFamily& f);

FamilyType detect_family_type(const PolyFamily& f);

FactorClass smallest_factor(const PolyFamily& f);

/// Smallest factor for the family {l_1 p, ..., l_k p}: the (k-1)-step
/// nilfactor for k >= 2, the rational Kronecker factor for k = 1.
FactorClass smallest_factor_multiple(const std::vector<Int>& multipliers, const IntPolynomial& p);

/// True iff the family falls in the exceptional cases where the optimal
/// multiple-recurrence lower bound is expected to fail: type E2 or E3, or E1
/// whose sorted coefficients l < m < r satisfy r != l + m. Members must have
/// zero constant term.
bool lower_bound_exceptional(const PolyFamily& f);

}  // namespace polyerg
