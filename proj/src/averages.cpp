#include "polyerg/averages.hpp"

#include <cmath>
#include <numbers>

namespace polyerg {

namespace {

constexpr long kChunk = 1 << 15;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

DiffTable::DiffTable(const SymPoly& P, const Int& start, const IrrationalBasis& basis) {
    long deg = std::max<long>(P.degree(), 0);
    std::vector<SymbolicReal> row(static_cast<std::size_t>(deg) + 1);
    for (long i = 0; i <= deg; ++i) row[static_cast<std::size_t>(i)] = P.evaluate(start + Int(i));
    v_.resize(row.size());
    for (std::size_t lvl = 0; lvl < row.size(); ++lvl) {
        v_[lvl] = frac_part(row[0].approx(basis)).get_d();
        for (std::size_t i = 0; i + 1 < row.size() - lvl; ++i) row[i] = row[i + 1] - row[i];
    }
}

std::complex<double> average_unit_phases_serial(const std::vector<SymPoly>& phases, long M, long N,
                                                const IrrationalBasis& basis) {
    if (N - M < 1) throw ArgumentError("average: need N - M >= 1");
    SymPoly total;
    for (const auto& p : phases) total += p;
    DiffTable t(total, Int(M), basis);
    double re = 0.0, im = 0.0;
    for (long n = M; n < N; ++n) {
        double a = kTwoPi * t.value();
        re += std::cos(a);
        im += std::sin(a);
        t.step();
    }
    double cnt = static_cast<double>(N - M);
    return {re / cnt, im / cnt};
}

std::complex<double> average_unit_phases_parallel(const std::vector<SymPoly>& phases, long M, long N,
                                                  const IrrationalBasis& basis) {
    if (N - M < 1) throw ArgumentError("average: need N - M >= 1");
    SymPoly total;
    for (const auto& p : phases) total += p;

    long nchunks = (N - M + kChunk - 1) / kChunk;
    std::vector<std::complex<double>> partial(static_cast<std::size_t>(nchunks));

#pragma omp parallel for schedule(dynamic)
    for (long c = 0; c < nchunks; ++c) {
        long lo = M + c * kChunk;
        long hi = std::min(N, lo + kChunk);
        DiffTable t(total, Int(lo), basis);
        double re = 0.0, im = 0.0;
        for (long n = lo; n < hi; ++n) {
            double a = kTwoPi * t.value();
            re += std::cos(a);
            im += std::sin(a);
            t.step();
        }
        partial[static_cast<std::size_t>(c)] = {re, im};
    }

    std::complex<double> sum{0.0, 0.0};
    for (const auto& p : partial) sum += p;  // fixed chunk order
    return sum / static_cast<double>(N - M);
}

SymPoly total_character_phase(const UnipotentAffineMap& T, const PolyFamily& f,
                              const std::vector<Character>& chars, const std::vector<SymbolicReal>& x) {
    if (chars.size() != f.size()) throw ArgumentError("character average: one character per family member required");
    OrbitPolynomial orbit = orbit_closed_form(T);
    SymPoly total;
    for (std::size_t i = 0; i < f.size(); ++i) {
        SymPoly phase = character_phase(orbit, chars[i], x);
        total += phase.compose_int(f[i]);
    }
    return total;
}

std::complex<double> analytic_multiple_limit(const UnipotentAffineMap& T, const PolyFamily& f,
                                             const std::vector<Character>& chars,
                                             const std::vector<SymbolicReal>& x) {
    return phase_limit(total_character_phase(T, f, chars, x));
}

std::vector<SymbolicReal> exact_point(const std::vector<double>& x0) {
    std::vector<SymbolicReal> x(x0.size());
    for (std::size_t i = 0; i < x0.size(); ++i) {
        Rat r(x0[i]);  // dyadic rational, exact
        r.canonicalize();
        x[i] = SymbolicReal(r);
    }
    return x;
}

std::vector<double> to_doubles(const std::vector<SymbolicReal>& xs, const IrrationalBasis& basis) {
    std::vector<double> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = xs[i].to_double(basis);
    return out;
}

std::complex<double> empirical_multiple_average(const UnipotentAffineMap& T, const PolyFamily& f,
                                                const std::vector<Character>& chars,
                                                const std::vector<double>& x0, long M, long N, bool parallel) {
    SymPoly total = total_character_phase(T, f, chars, exact_point(x0));
    return parallel ? average_unit_phases_parallel({total}, M, N) : average_unit_phases_serial({total}, M, N);
}

double StepFunction::operator()(double x) const {
    // x in [0,1); pieces are [edges_j, edges_{j+1})
    std::size_t j = edges.size() - 1;
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (x < edges[i].get_d()) {
            j = i - 1;
            break;
        }
    return values[j];
}

double StepFunction::integral() const {
    double acc = 0.0;
    for (std::size_t j = 0; j < edges.size(); ++j) {
        double hi = j + 1 < edges.size() ? edges[j + 1].get_d() : 1.0;
        acc += values[j] * (hi - edges[j].get_d());
    }
    return acc;
}

StepFunction StepFunction::indicator(const Rat& lo, const Rat& hi) {
    StepFunction h;
    if (lo > 0) {
        h.edges = {Rat(0), lo, hi};
        h.values = {0.0, 1.0, 0.0};
    } else {
        h.edges = {Rat(0), hi};
        h.values = {1.0, 0.0};
    }
    return h;
}

StepFunction StepFunction::one() {
    StepFunction h;
    h.edges = {Rat(0)};
    h.values = {1.0};
    return h;
}

WeightedAverageResult weighted_average(const UnipotentAffineMap& T, const PolyFamily& f,
                                       const std::vector<Character>& chars, const StepFunction& h,
                                       const SymbolicReal& beta, const std::vector<double>& x0, long N) {
    if (!beta.is_irrational()) throw ArgumentError("weighted_average: beta must be irrational");
    if (N < 1) throw ArgumentError("weighted_average: N >= 1 required");

    SymPoly total = total_character_phase(T, f, chars, exact_point(x0));
    SymPoly beta_seq(std::vector<SymbolicReal>{SymbolicReal(), beta});  // n * beta

    long nchunks = (N + kChunk - 1) / kChunk;
    std::vector<std::complex<double>> wpart(static_cast<std::size_t>(nchunks));
    std::vector<std::complex<double>> upart(static_cast<std::size_t>(nchunks));

#pragma omp parallel for schedule(dynamic)
    for (long c = 0; c < nchunks; ++c) {
        long lo = c * kChunk;
        long hi = std::min(N, lo + kChunk);
        DiffTable t(total, Int(lo));
        DiffTable tb(beta_seq, Int(lo));
        std::complex<double> w{0, 0}, u{0, 0};
        for (long n = lo; n < hi; ++n) {
            double a = kTwoPi * t.value();
            std::complex<double> e{std::cos(a), std::sin(a)};
            u += e;
            w += h(tb.value()) * e;
            t.step();
            tb.step();
        }
        wpart[static_cast<std::size_t>(c)] = w;
        upart[static_cast<std::size_t>(c)] = u;
    }

    std::complex<double> wsum{0, 0}, usum{0, 0};
    for (long c = 0; c < nchunks; ++c) {
        wsum += wpart[static_cast<std::size_t>(c)];
        usum += upart[static_cast<std::size_t>(c)];
    }

    WeightedAverageResult res;
    res.weighted = wsum / static_cast<double>(N);
    res.unweighted = usum / static_cast<double>(N);
    res.h_integral = h.integral();

    // factorization hypothesis: members are p, 2p, ..., kp with deg p > 1
    res.factorization_hypothesis_met = false;
    if (!f.members().empty() && !f[0].is_constant() && f[0].degree() > 1) {
        bool ok = true;
        for (std::size_t i = 0; i < f.size(); ++i)
            if (!(f[i] == Int(static_cast<long>(i) + 1) * f[0])) {
                ok = false;
                break;
            }
        res.factorization_hypothesis_met = ok;
    }
    return res;
}

std::vector<long> scan_select(const std::vector<SymPoly>& polys, long N,
                              const std::function<bool(const std::vector<double>&)>& keep) {
    std::vector<DiffTable> tables;
    tables.reserve(polys.size());
    for (const auto& p : polys) tables.emplace_back(p, Int(0));
    std::vector<long> out;
    std::vector<double> vals(polys.size());
    for (long n = 0; n < N; ++n) {
        for (std::size_t i = 0; i < tables.size(); ++i) vals[i] = tables[i].value();
        if (keep(vals)) out.push_back(n);
        for (auto& t : tables) t.step();
    }
    return out;
}

}  // namespace polyerg
