#pragma once

#include <optional>
#include <vector>

#include "polyerg/arith.hpp"

namespace polyerg {

/// Zero-sum linear equation a_1 x_1 + ... + a_k x_k = 0.
struct LinearEquation {
    std::vector<long> coeffs;
    explicit LinearEquation(std::vector<long> a);
    std::size_t arity() const { return coeffs.size(); }
    /// (x_1..x_k) with pairwise distinct entries satisfying the equation?
    bool is_solution(const std::vector<long>& x) const;
};

inline LinearEquation three_ap_equation() { return LinearEquation({1, 1, -2}); }  // x + y = 2z

struct SolutionFreeSet {
    long N = 0;
    std::vector<long> elements;  // sorted subset of {1..N}
    LinearEquation equation{{1, 1, -2}};
    bool verified = false;       // exhaustive distinct-entry check done
    bool certified_maximum = false;
};

/// Exhaustive check that no k distinct elements solve the equation.
bool verify_solution_free(const std::vector<long>& elements, const LinearEquation& eq);

/// Checks whether inserting `candidate` into the solution-free `sorted_set`
/// creates a distinct-entry solution.
bool insertion_creates_solution(const std::vector<long>& sorted_set, long candidate, const LinearEquation& eq);

/// Progression-free set by the digit construction: integers whose base
/// (2d-1) digits are < d and have a fixed squared norm, the (d, norm) pair
/// chosen to maximize the bucket. Exhaustively verified for N <= 10^4.
SolutionFreeSet behrend_set(long N);

enum class SearchMode { Exact, Greedy };

constexpr long kExactSearchBudget = 40;

/// Largest (exact mode, N <= 40, branch and bound over root branches with a
/// shared incumbent) or maximal-by-ascending-scan (greedy) solution-free
/// subset of {1..N}.
SolutionFreeSet max_solution_free(const LinearEquation& eq, long N, SearchMode mode);

struct TypeEstimate {
    struct Sample {
        long N;
        long best_size;
        bool exact;
    };
    std::vector<Sample> samples;
    std::optional<double> fitted_exponent;  // least-squares slope of log size vs log N, clamped to [0,1]
};

/// Empirical lower estimate of the equation type from best set sizes at the
/// given range bounds.
TypeEstimate type_estimate(const LinearEquation& eq, const std::vector<long>& n_list, SearchMode mode);

}  // namespace polyerg
