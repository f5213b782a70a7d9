#include "polyerg/extremal.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

namespace polyerg {

LinearEquation::LinearEquation(std::vector<long> a) : coeffs(std::move(a)) {
    if (coeffs.size() < 2) throw ArgumentError("LinearEquation: at least two variables required");
    long sum = 0;
    for (long c : coeffs) {
        if (c == 0) throw ArgumentError("LinearEquation: zero coefficient");
        sum += c;
    }
    if (sum != 0) throw ArgumentError("LinearEquation: coefficients must sum to zero");
}

bool LinearEquation::is_solution(const std::vector<long>& x) const {
    if (x.size() != coeffs.size()) return false;
    long s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += coeffs[i] * x[i];
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (x[i] == x[j]) return false;
    }
    return s == 0;
}

namespace {

// Enumerates distinct-entry assignments of set elements to the slots in
// `slot_coeffs`, accumulating the weighted sum; true once any assignment
// lands on `target` (= 0 overall). The final slot is solved by division
// instead of enumeration.
bool assignment_hits(const std::vector<long>& set, const std::vector<long>& slot_coeffs, std::size_t slot,
                     std::vector<long>& used, long partial, long target) {
    if (slot + 1 == slot_coeffs.size()) {
        long c = slot_coeffs[slot];
        long need = target - partial;
        if (need % c != 0) return false;
        long x = need / c;
        if (std::find(used.begin(), used.end(), x) != used.end()) return false;
        return std::find(set.begin(), set.end(), x) != set.end();
    }
    for (long v : set) {
        if (std::find(used.begin(), used.end(), v) != used.end()) continue;
        used.push_back(v);
        if (assignment_hits(set, slot_coeffs, slot + 1, used, partial + slot_coeffs[slot] * v, target)) {
            used.pop_back();
            return true;
        }
        used.pop_back();
    }
    return false;
}

}  // namespace

bool insertion_creates_solution(const std::vector<long>& sorted_set, long candidate, const LinearEquation& eq) {
    // candidate occupies exactly one slot; remaining slots filled from the set
    const auto& a = eq.coeffs;
    for (std::size_t pos = 0; pos < a.size(); ++pos) {
        std::vector<long> rest;
        rest.reserve(a.size() - 1);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (i != pos) rest.push_back(a[i]);
        std::vector<long> used{candidate};
        if (assignment_hits(sorted_set, rest, 0, used, a[pos] * candidate, 0)) return true;
    }
    return false;
}

bool verify_solution_free(const std::vector<long>& elements, const LinearEquation& eq) {
    // ascending insertion order: any solution is caught when its maximum
    // element arrives
    std::vector<long> sorted = elements;
    std::sort(sorted.begin(), sorted.end());
    std::vector<long> acc;
    acc.reserve(sorted.size());
    for (long v : sorted) {
        if (insertion_creates_solution(acc, v, eq)) return false;
        acc.push_back(v);
    }
    return true;
}

SolutionFreeSet behrend_set(long N) {
    if (N < 1) throw ArgumentError("behrend_set: N >= 1 required");
    LinearEquation ap = three_ap_equation();
    if (N == 1) return {1, {1}, ap, true, false};

    std::vector<long> best{1};
    for (long d = 2; 2 * d - 1 <= N; ++d) {
        long base = 2 * d - 1;
        // digit count: smallest power of base exceeding N, value-filtered below
        int K = 1;
        long pw = base;
        while (pw <= N / base + 1) {
            pw *= base;
            ++K;
        }
        for (int digits = 1; digits <= K + 1; ++digits) {
            std::map<long, std::vector<long>> buckets;  // squared norm -> values
            std::vector<long> digit(static_cast<std::size_t>(digits), 0);
            for (;;) {
                long value = 0, norm = 0;
                for (int i = digits - 1; i >= 0; --i) {
                    value = value * base + digit[static_cast<std::size_t>(i)];
                    norm += digit[static_cast<std::size_t>(i)] * digit[static_cast<std::size_t>(i)];
                }
                if (value >= 1 && value <= N) buckets[norm].push_back(value);
                int i = 0;
                while (i < digits && ++digit[static_cast<std::size_t>(i)] == d) {
                    digit[static_cast<std::size_t>(i)] = 0;
                    ++i;
                }
                if (i == digits) break;
            }
            for (auto& [norm, vals] : buckets) {
                (void)norm;
                std::sort(vals.begin(), vals.end());
                if (vals.size() > best.size()) best = vals;
            }
            if (std::pow(static_cast<double>(d), digits) > 4e6) break;  // enumeration budget
        }
    }

    SolutionFreeSet out;
    out.N = N;
    out.elements = std::move(best);
    out.equation = ap;
    out.verified = N <= 10'000 ? verify_solution_free(out.elements, ap) : false;
    if (N <= 10'000 && !out.verified) throw std::logic_error("behrend_set: construction failed verification");
    return out;
}

namespace {

struct BnB {
    const LinearEquation& eq;
    long N;
    std::atomic<long> best_size{0};

    explicit BnB(const LinearEquation& e, long n) : eq(e), N(n) {}

    // include-first DFS descending from `next`; set is sorted ascending
    void search(std::vector<long>& set, long next) {
        if (next == 0) {
            long sz = static_cast<long>(set.size());
            long cur = best_size.load();
            while (sz > cur && !best_size.compare_exchange_weak(cur, sz)) {
            }
            return;
        }
        if (static_cast<long>(set.size()) + next <= best_size.load()) return;  // bound
        if (!insertion_creates_solution(set, next, eq)) {
            set.push_back(next);
            search(set, next - 1);
            set.pop_back();
        }
        if (static_cast<long>(set.size()) + next - 1 > best_size.load()) search(set, next - 1);
    }
};

// deterministic witness: first maximum found by serial include-first DFS
bool witness_dfs(const LinearEquation& eq, long next, long target, std::vector<long>& set) {
    if (static_cast<long>(set.size()) == target) return true;
    if (next == 0 || static_cast<long>(set.size()) + next < target) return false;
    if (!insertion_creates_solution(set, next, eq)) {
        set.push_back(next);
        if (witness_dfs(eq, next - 1, target, set)) return true;
        set.pop_back();
    }
    return witness_dfs(eq, next - 1, target, set);
}

}  // namespace

SolutionFreeSet max_solution_free(const LinearEquation& eq, long N, SearchMode mode) {
    if (N < 1) throw ArgumentError("max_solution_free: N >= 1 required");
    SolutionFreeSet out;
    out.N = N;
    out.equation = eq;

    if (mode == SearchMode::Greedy) {
        if (N > 100'000) throw ArgumentError("max_solution_free: greedy budget is N <= 1e5");
        std::vector<long> set;
        for (long v = 1; v <= N; ++v)
            if (!insertion_creates_solution(set, v, eq)) set.push_back(v);
        out.elements = std::move(set);
        out.verified = verify_solution_free(out.elements, eq);
        return out;
    }

    if (N > kExactSearchBudget)
        throw ArgumentError("max_solution_free: exact search budget is N <= " +
                            std::to_string(kExactSearchBudget) + "; use greedy mode");

    BnB bnb(eq, N);
    // parallel over the root include/exclude branches
#pragma omp parallel
    {
#pragma omp single nowait
        {
#pragma omp task
            {
                std::vector<long> set{N};
                bnb.search(set, N - 1);
            }
#pragma omp task
            {
                std::vector<long> set;
                bnb.search(set, N - 1);
            }
        }
    }
    long best = bnb.best_size.load();

    std::vector<long> witness;
    if (!witness_dfs(eq, N, best, witness)) throw std::logic_error("max_solution_free: witness extraction failed");
    std::sort(witness.begin(), witness.end());
    out.elements = std::move(witness);
    out.verified = verify_solution_free(out.elements, eq);
    out.certified_maximum = true;
    return out;
}

TypeEstimate type_estimate(const LinearEquation& eq, const std::vector<long>& n_list, SearchMode mode) {
    if (!std::is_sorted(n_list.begin(), n_list.end())) throw ArgumentError("type_estimate: N list must ascend");
    TypeEstimate est;
    for (long n : n_list) {
        SearchMode m = mode;
        if (m == SearchMode::Exact && n > kExactSearchBudget) m = SearchMode::Greedy;
        SolutionFreeSet s = max_solution_free(eq, n, m);
        est.samples.push_back({n, static_cast<long>(s.elements.size()), s.certified_maximum});
    }
    if (est.samples.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        double cnt = static_cast<double>(est.samples.size());
        for (const auto& s : est.samples) {
            double x = std::log(static_cast<double>(s.N));
            double y = std::log(static_cast<double>(std::max(s.best_size, 1L)));
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        double denom = cnt * sxx - sx * sx;
        if (denom > 0) {
            double slope = (cnt * sxy - sx * sy) / denom;
            est.fitted_exponent = std::clamp(slope, 0.0, 1.0);
        }
    }
    return est;
}

}  // namespace polyerg
