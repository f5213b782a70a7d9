#pragma once

#include <optional>

#include "polyerg/affine.hpp"
#include "polyerg/boxset.hpp"
#include "polyerg/family.hpp"

namespace polyerg {

struct Correlation {
    bool exact;
    Rat value;          // meaningful when exact
    double estimate;    // double view in both modes
    double std_error;   // Monte Carlo only, else 0
    long samples = 0;   // Monte Carlo only
    unsigned long seed = 0;
};

/// Estimate of mu(A and T^{-p_1(n)}A and ... and T^{-p_k(n)}A).
///
/// d = 1: exact circle-arc intersection. d = 2: exact slice integration, an
/// arrangement sweep whose pieces are linear in the first coordinate and
/// integrated by the midpoint rule. Irrational rotation data is snapped to
/// its 160-digit rational approximation first, so all arithmetic afterwards
/// is exact over Q; the snap perturbs the result by less than 1e-100.
/// d >= 3: stratified Monte Carlo with `resolution` samples and the given
/// seed, returning estimate plus standard error.
Correlation box_correlation(const UnipotentAffineMap& T, const BoxSet& A, const PolyFamily& f, const Int& n,
                            long resolution = 1'000'000, unsigned long seed = 0x5EED);

struct RestrictedAverage {
    bool has_samples;
    double average;       // over n in S_delta, exact per-term correlations
    long sample_count;    // |S_delta intersect [0, N)|
    double mu_A;
};

/// Average of the correlation over n in S_delta = {n : {q_1(n) b} and
/// {q_2(n) b} lie within delta of 0 in the max metric}, for a rotation T.
RestrictedAverage restricted_average(const UnipotentAffineMap& T, const BoxSet& A, const PolyFamily& f,
                                     const IntPolynomial& q1, const IntPolynomial& q2, const Rat& delta,
                                     long N);

}  // namespace polyerg
