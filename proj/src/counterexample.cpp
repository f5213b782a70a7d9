#include "polyerg/counterexample.hpp"

#include <cmath>

#include "polyerg/averages.hpp"
#include "polyerg/poly_parse.hpp"

namespace polyerg {

double exponent_from_delta(double delta, bool halved) {
    if (delta <= 0.0 || delta >= 1.0) throw ArgumentError("exponent_from_delta: delta in (0,1) required");
    double c = (2.0 - delta) / (1.0 - delta);
    return halved ? 0.5 * c : c;
}

namespace {

BoxSet strip_union(const std::vector<long>& lambda, long cell_den, long len_den) {
    // union over j of [j/cell_den, j/cell_den + 1/len_den)
    std::vector<Box> boxes;
    for (long j : lambda) {
        Rat lo(j, cell_den);
        lo.canonicalize();
        Rat hi = lo + Rat(1, len_den);
        hi.canonicalize();
        boxes.push_back(Box{{lo}, {hi}});
    }
    return BoxSet(1, std::move(boxes));
}

CounterexampleReport run_chain(const SolutionFreeSet& lambda, const BoxSet& A, const SymbolicReal& alpha,
                               const PolyFamily& shifts, double exponent, long n_max) {
    UnipotentAffineMap T = UnipotentAffineMap::skew2(alpha, Int(2), alpha);

    CounterexampleReport rep;
    rep.range_bound = lambda.N;
    rep.lambda = lambda.elements;
    rep.mu_A = A.measure();
    rep.exponent = exponent;
    rep.correlation_bound = Rat(static_cast<long>(lambda.elements.size()), lambda.N * lambda.N);
    rep.correlation_bound.canonicalize();
    rep.all_bounds_hold = true;

    double mu_pow = std::pow(rep.mu_A.get_d(), exponent);
    for (long n = 1; n <= n_max; ++n) {
        Correlation c = box_correlation(T, A, shifts, Int(n));
        bool ok = c.value <= rep.correlation_bound;
        rep.all_bounds_hold &= ok;
        rep.rows.push_back({n, c.value, ok, mu_pow});
    }
    return rep;
}

}  // namespace

CounterexampleReport construct_counterexample_i(const SolutionFreeSet& lambda, const SymbolicReal& alpha,
                                                double c_exponent, long n_max) {
    if (!lambda.verified) throw ArgumentError("counterexample i: Lambda must be verified solution-free");
    LinearEquation expect({1, 8, -6, -3});
    if (lambda.equation.coeffs != expect.coeffs)
        throw ArgumentError("counterexample i: Lambda must target x + 8z - 6y - 3w = 0");
    if (!alpha.is_irrational()) throw ArgumentError("counterexample i: alpha must be irrational");

    BoxSet B = strip_union(lambda.elements, 9 * lambda.N, 81 * lambda.N);
    BoxSet A = BoxSet::product(BoxSet::full(1), B);
    PolyFamily shifts({parse_polynomial("2*n"), parse_polynomial("3*n"), parse_polynomial("4*n")});
    return run_chain(lambda, A, alpha, shifts, c_exponent, n_max);
}

CounterexampleReport construct_counterexample_ii(const SolutionFreeSet& lambda, const SymbolicReal& alpha,
                                                 double d_exponent, long n_max) {
    if (!lambda.verified) throw ArgumentError("counterexample ii: Lambda must be verified solution-free");
    LinearEquation expect({2, 1, 1, -2, -2});
    if (lambda.equation.coeffs != expect.coeffs)
        throw ArgumentError("counterexample ii: Lambda must target 2x + y + w - 2z - 2v = 0");
    if (!verify_solution_free(lambda.elements, three_ap_equation()))
        throw ArgumentError("counterexample ii: Lambda must also be 3-AP-free");
    if (!alpha.is_irrational()) throw ArgumentError("counterexample ii: alpha must be irrational");

    BoxSet B = strip_union(lambda.elements, 4 * lambda.N, 16 * lambda.N);
    BoxSet A = BoxSet::product(B, B);
    PolyFamily shifts({parse_polynomial("n"), parse_polynomial("2*n"), parse_polynomial("n^2")});
    return run_chain(lambda, A, alpha, shifts, d_exponent, n_max);
}

OrbitTransfer orbit_transfer(const UnipotentAffineMap& T, const BoxSet& A, const std::vector<double>& x0,
                             long N) {
    T.validate();
    if (N < 1) throw ArgumentError("orbit_transfer: N >= 1 required");
    if (A.dim() != T.dim) throw ArgumentError("orbit_transfer: box dimension must match the map");

    OrbitPolynomial orbit = orbit_closed_form(T);
    std::vector<SymbolicReal> x = exact_point(x0);

    // one difference table per coordinate
    std::vector<SymPoly> coords;
    for (std::size_t i = 0; i < T.dim; ++i) {
        Character chi;
        chi.frequency.assign(T.dim, Int(0));
        chi.frequency[i] = 1;
        coords.push_back(character_phase(orbit, chi, x));
    }

    OrbitTransfer out;
    out.mu_A = A.measure().get_d();
    auto keep = [&A](const std::vector<double>& vals) { return A.contains(vals); };
    std::vector<long> sel = scan_select(coords, N + 1, keep);
    // scan starts at n = 0; the transfer set is 1..N
    out.lambda.clear();
    for (long n : sel)
        if (n >= 1) out.lambda.push_back(n);
    out.density = static_cast<double>(out.lambda.size()) / static_cast<double>(N);
    return out;
}

}  // namespace polyerg
