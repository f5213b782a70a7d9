#pragma once

// Independent oracles used by the test suites. These deliberately avoid the
// library's own linear algebra and root-finding paths: the elimination here
// is fraction-free integer Bareiss, equation matrices are assembled by raw
// convolution, and root sets come from direct scans.

#include <random>
#include <set>
#include <vector>

#include "polyerg/family.hpp"
#include "polyerg/polynomial.hpp"

namespace polyerg::oracles {

// row-major integer matrix
struct ZMatrix {
    std::size_t rows, cols;
    std::vector<Int> a;
    Int& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

// Bareiss fraction-free elimination; returns the rank.
inline std::size_t bareiss_rank(ZMatrix m) {
    std::size_t rank = 0;
    Int prev(1);
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t piv = rank;
        while (piv < m.rows && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != rank)
            for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(rank, c), m.at(piv, c));
        for (std::size_t r = rank + 1; r < m.rows; ++r) {
            for (std::size_t c = col + 1; c < m.cols; ++c)
                m.at(r, c) = (m.at(rank, col) * m.at(r, c) - m.at(r, col) * m.at(rank, c)) / prev;
            m.at(r, col) = 0;
        }
        prev = m.at(rank, col);
        ++rank;
    }
    return rank;
}

// coefficient of n^j in p*q, by direct convolution
inline Int conv_coeff(const IntPolynomial& p, const IntPolynomial& q, long j) {
    Int s(0);
    for (long i = 0; i <= j; ++i) s += p.coeff(static_cast<std::size_t>(i)) * q.coeff(static_cast<std::size_t>(j - i));
    return s;
}

// Existence of a solution of the two coefficient-matching equations with
// (k1,l1,m1) != 0, decided by two Bareiss ranks: a solution exists iff
// dim Null(A) > dim Null(A restricted to k1=l1=m1=0).
inline bool e12_solvable_oracle(const PolyFamily& f) {
    auto t = f.tilde();
    long dmax = 0;
    for (const auto& p : t) dmax = std::max(dmax, 2 * p.degree());

    ZMatrix full{2 * static_cast<std::size_t>(dmax), 6, {}};
    full.a.assign(full.rows * full.cols, Int(0));
    std::size_t row = 0;
    for (long j = 1; j <= dmax; ++j, ++row)
        for (int i = 0; i < 3; ++i) full.at(row, static_cast<std::size_t>(i)) = t[static_cast<std::size_t>(i)].coeff(static_cast<std::size_t>(j));
    for (long j = 1; j <= dmax; ++j, ++row)
        for (int i = 0; i < 3; ++i) {
            full.at(row, static_cast<std::size_t>(i)) = conv_coeff(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(i)], j);
            full.at(row, static_cast<std::size_t>(i) + 3) = t[static_cast<std::size_t>(i)].coeff(static_cast<std::size_t>(j));
        }

    ZMatrix right{full.rows, 3, {}};
    right.a.assign(right.rows * right.cols, Int(0));
    for (std::size_t r = 0; r < full.rows; ++r)
        for (std::size_t c = 0; c < 3; ++c) right.at(r, c) = full.at(r, c + 3);

    std::size_t rank_full = bareiss_rank(full);
    std::size_t rank_right = bareiss_rank(right);
    return 6 - rank_full > 3 - rank_right;
}

// substitution check of a claimed solution into both equations
inline bool e12_solution_checks(const PolyFamily& f, const std::array<Int, 6>& v) {
    auto t = f.tilde();
    IntPolynomial e1 = v[0] * t[0] + v[1] * t[1] + v[2] * t[2];
    IntPolynomial e2 = v[0] * (t[0] * t[0]) + v[1] * (t[1] * t[1]) + v[2] * (t[2] * t[2]) + v[3] * t[0] +
                       v[4] * t[1] + v[5] * t[2];
    bool nontrivial = v[0] != 0 || v[1] != 0 || v[2] != 0;
    return nontrivial && e1.is_zero() && e2.is_zero();
}

inline std::set<Int> roots_mod_bruteforce(const IntPolynomial& p, long m) {
    std::set<Int> out;
    for (long n = 0; n < m; ++n)
        if (mod_floor(p(Int(n)), Int(m)) == 0) out.insert(Int(n));
    return out;
}

// all distinct-entry tuples scanned directly
inline bool has_solution_bruteforce(const std::vector<long>& set, const std::vector<long>& coeffs) {
    std::vector<std::size_t> idx(coeffs.size(), 0);
    if (set.empty()) return false;
    for (;;) {
        bool distinct = true;
        long s = 0;
        for (std::size_t i = 0; i < coeffs.size() && distinct; ++i) {
            for (std::size_t j = i + 1; j < coeffs.size(); ++j)
                if (set[idx[i]] == set[idx[j]]) {
                    distinct = false;
                    break;
                }
            s += coeffs[i] * set[idx[i]];
        }
        if (distinct && s == 0) return true;
        std::size_t i = 0;
        while (i < coeffs.size() && ++idx[i] == set.size()) {
            idx[i] = 0;
            ++i;
        }
        if (i == coeffs.size()) return false;
    }
}

// random essentially distinct triples with bounded degree and coefficients
inline PolyFamily random_family(std::mt19937_64& rng, int max_deg, int max_coeff) {
    std::uniform_int_distribution<int> degd(1, max_deg);
    std::uniform_int_distribution<int> cd(-max_coeff, max_coeff);
    for (;;) {
        std::vector<IntPolynomial> ps;
        for (int i = 0; i < 3; ++i) {
            int d = degd(rng);
            std::vector<Int> c(static_cast<std::size_t>(d) + 1);
            for (int j = 0; j <= d; ++j) c[static_cast<std::size_t>(j)] = cd(rng);
            ps.emplace_back(std::move(c));
        }
        PolyFamily f(std::move(ps));
        if (essentially_distinct(f)) return f;
    }
}

// a corpus skewed toward structured families so every tag shows up
inline PolyFamily random_structured_family(std::mt19937_64& rng, int max_deg, int max_coeff) {
    std::uniform_int_distribution<int> pick(0, 3);
    std::uniform_int_distribution<int> cd(1, 4);
    std::uniform_int_distribution<int> sd(-3, 3);
    int kind = pick(rng);
    if (kind == 0) return random_family(rng, max_deg, max_coeff);
    // base polynomial p of degree 1..3
    std::uniform_int_distribution<int> degd(1, 3);
    int d = degd(rng);
    std::vector<Int> c(static_cast<std::size_t>(d) + 1);
    for (int j = 1; j <= d; ++j) c[static_cast<std::size_t>(j)] = sd(rng);
    if (c[static_cast<std::size_t>(d)] == 0) c[static_cast<std::size_t>(d)] = 1;
    IntPolynomial p{std::move(c)};
    IntPolynomial p2 = p * p;
    for (int attempt = 0; attempt < 20; ++attempt) {
        long l = cd(rng), m = cd(rng) + 4, r = cd(rng) + 8;
        long k = cd(rng);
        std::vector<IntPolynomial> ps;
        if (kind == 1) ps = {Int(l) * p, Int(m) * p, Int(r) * p};
        if (kind == 2) ps = {Int(l) * p, Int(m) * p, Int(k) * p2 + Int(r) * p};
        if (kind == 3)
            ps = {Int(k) * p2 + Int(l) * p, Int(k) * p2 + Int(m) * p, Int(k) * p2 + Int(r) * p};
        PolyFamily f(std::move(ps));
        if (essentially_distinct(f)) return f;
    }
    return random_family(rng, max_deg, max_coeff);
}

}  // namespace polyerg::oracles
