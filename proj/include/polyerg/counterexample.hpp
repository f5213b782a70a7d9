#pragma once

#include <vector>

#include "polyerg/affine.hpp"
#include "polyerg/boxset.hpp"
#include "polyerg/correlation.hpp"
#include "polyerg/extremal.hpp"

namespace polyerg {

/// c = (2 - delta) / (1 - delta); halved variant for the two-dimensional
/// construction.
double exponent_from_delta(double delta, bool halved);

struct CounterexampleReport {
    long range_bound;            // N with Lambda in {1..N}
    std::vector<long> lambda;
    Rat mu_A;
    double exponent;             // c or d as supplied
    Rat correlation_bound;       // |Lambda| / N^2
    struct Row {
        long n;
        Rat correlation;         // exact slice value
        bool within_bound;       // correlation <= |Lambda|/N^2
        double mu_pow;           // mu(A)^exponent
    };
    std::vector<Row> rows;
    bool all_bounds_hold;
};

/// Two-step skew with B = union of [j/(9N), j/(9N)+1/(81N)), A = T x B and
/// shifts {2n, 3n, 4n}; checks the correlation chain per n in [1, n_max].
/// Lambda must be verified solution-free for x + 8z - 6y - 3w = 0.
CounterexampleReport construct_counterexample_i(const SolutionFreeSet& lambda, const SymbolicReal& alpha,
                                                double c_exponent, long n_max);

/// Same skew with B = union of [j/(4N), j/(4N)+1/(16N)), A = B x B and
/// shifts {n, 2n, n^2}. Lambda must be verified for 2x + y + w - 2z - 2v = 0
/// and additionally 3-AP-free.
CounterexampleReport construct_counterexample_ii(const SolutionFreeSet& lambda, const SymbolicReal& alpha,
                                                 double d_exponent, long n_max);

struct OrbitTransfer {
    std::vector<long> lambda;   // {n <= N : T^n x0 in A}
    double density;             // |lambda| / N
    double mu_A;
};

/// Return-time set of the orbit of x0 into A; unique ergodicity makes its
/// density approach mu(A), reported as a diagnostic.
OrbitTransfer orbit_transfer(const UnipotentAffineMap& T, const BoxSet& A, const std::vector<double>& x0,
                             long N);

}  // namespace polyerg
