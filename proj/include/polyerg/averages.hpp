#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "polyerg/affine.hpp"
#include "polyerg/family.hpp"
#include "polyerg/sympoly.hpp"

namespace polyerg {

/// Finite-difference stepper for the fractional parts of a real polynomial
/// sequence. The table is seeded exactly (symbolic evaluation, exact
/// reduction mod 1), then advanced in doubles with every entry kept in
/// [0, 1); the accumulated error stays below 1e-9 over 1e6 steps for the
/// degrees this project uses.
class DiffTable {
  public:
    DiffTable(const SymPoly& P, const Int& start, const IrrationalBasis& basis = IrrationalBasis::standard());

    double value() const { return v_.empty() ? 0.0 : v_[0]; }
    void step() {
        for (std::size_t i = 0; i + 1 < v_.size(); ++i) {
            v_[i] += v_[i + 1];
            if (v_[i] >= 1.0) v_[i] -= 1.0;
        }
    }

  private:
    std::vector<double> v_;  // v_[i] = frac(Delta^i P(n))
};

/// (1/(N-M)) * sum_{n=M}^{N-1} e(sum_i phases_i(n)).
///
/// The parallel kernel partitions [M, N) into fixed-size chunks, reseeds the
/// difference tables exactly at each chunk start and reduces the chunk
/// partial sums in chunk order, so results do not depend on the thread
/// count. The serial kernel is the single-table reference implementation.
std::complex<double> average_unit_phases_serial(const std::vector<SymPoly>& phases, long M, long N,
                                                const IrrationalBasis& basis = IrrationalBasis::standard());
std::complex<double> average_unit_phases_parallel(const std::vector<SymPoly>& phases, long M, long N,
                                                  const IrrationalBasis& basis = IrrationalBasis::standard());

/// Builds the total phase polynomial sum_i frequency_i . orbit(p_i(n), x)
/// for symbolic x; the shared core of the analytic and empirical averages.
SymPoly total_character_phase(const UnipotentAffineMap& T, const PolyFamily& f,
                              const std::vector<Character>& chars, const std::vector<SymbolicReal>& x);

/// Exact uniform Cesaro limit of the character average along the family.
std::complex<double> analytic_multiple_limit(const UnipotentAffineMap& T, const PolyFamily& f,
                                             const std::vector<Character>& chars,
                                             const std::vector<SymbolicReal>& x);

/// Empirical character average over n in [M, N) from the initial point x0.
std::complex<double> empirical_multiple_average(const UnipotentAffineMap& T, const PolyFamily& f,
                                                const std::vector<Character>& chars,
                                                const std::vector<double>& x0, long M, long N,
                                                bool parallel = true);

/// Step function on the circle: value v_j on [edges_j, edges_{j+1}).
struct StepFunction {
    std::vector<Rat> edges;      // ascending, in [0,1); first edge 0
    std::vector<double> values;  // one per edge, piece [edge_j, edge_{j+1} or 1)
    double operator()(double x) const;
    double integral() const;
    static StepFunction indicator(const Rat& lo, const Rat& hi);  // 1 on [lo,hi)
    static StepFunction one();
};

struct WeightedAverageResult {
    std::complex<double> weighted;
    std::complex<double> unweighted;
    double h_integral;
    bool factorization_hypothesis_met;  // family {p,2p,...,kp} with deg p > 1
};

/// (1/N) sum h({n beta}) prod_i e(freq_i . T^{p_i(n)} x0), with the
/// unweighted average alongside for the product-formula comparison.
WeightedAverageResult weighted_average(const UnipotentAffineMap& T, const PolyFamily& f,
                                       const std::vector<Character>& chars, const StepFunction& h,
                                       const SymbolicReal& beta, const std::vector<double>& x0, long N);

/// All n in [0, N) whose polynomial coordinate fracs pass a predicate;
/// sequences are stepped with difference tables.
std::vector<long> scan_select(const std::vector<SymPoly>& polys, long N,
                              const std::function<bool(const std::vector<double>&)>& keep);

std::vector<double> to_doubles(const std::vector<SymbolicReal>& xs,
                               const IrrationalBasis& basis = IrrationalBasis::standard());
std::vector<SymbolicReal> exact_point(const std::vector<double>& x0);

}  // namespace polyerg
