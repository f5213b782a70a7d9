#include "polyerg/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "polyerg/averages.hpp"
#include "polyerg/sympoly.hpp"

namespace polyerg {

namespace {

Rat snap_frac(const SymbolicReal& x) { return frac_part(x.approx()); }

struct Copy {
    Rat a;   // first-coordinate shift, in [0,1)
    Int g;   // second-coordinate slope (coupling * m)
    Rat w;   // second-coordinate offset, in [0,1)
    std::vector<std::pair<Rat, Rat>> s_base;  // eligible second-coordinate intervals (strip-local)
};

// shifts m_i for copies 0..k (0 first)
std::vector<Int> copy_shifts(const PolyFamily& f, const Int& n) {
    std::vector<Int> m{Int(0)};
    for (const auto& p : f.members()) m.push_back(p(n));
    return m;
}

Correlation exact_result(const Rat& v) {
    Correlation c;
    c.exact = true;
    c.value = v;
    c.estimate = v.get_d();
    c.std_error = 0.0;
    return c;
}

Correlation correlation_d1(const UnipotentAffineMap& T, const BoxSet& A, const PolyFamily& f, const Int& n) {
    auto shifts = copy_shifts(f, n);
    auto base = A.axis_intervals(0);
    std::vector<std::vector<std::pair<Rat, Rat>>> unions;
    for (const auto& m : shifts) {
        Rat a = snap_frac(T.b[0] * Rat(m));
        std::vector<std::pair<Rat, Rat>> u;
        for (const auto& [lo, hi] : base) u.emplace_back(lo - a, hi - a);
        unions.push_back(std::move(u));
    }
    return exact_result(circle_intersection_measure(unions));
}

// All t in [t0, t1) with dg * t + off == integer; dg != 0.
void alignment_cuts(const Int& dg, const Rat& off, const Rat& t0, const Rat& t1, std::vector<Rat>& out) {
    // t = (z - off) / dg for integers z; t in [t0, t1)
    Rat lo = Rat(dg) * t0 + off;
    Rat hi = Rat(dg) * t1 + off;
    if (lo > hi) std::swap(lo, hi);
    Int z = floor_rat(lo) + 1;
    Int zend = floor_rat(hi);  // z in (lo, hi]; endpoints handled as segment ends anyway
    for (; z <= zend; ++z) {
        Rat t = (Rat(z) - off) / Rat(dg);
        if (t0 < t && t < t1) out.push_back(t);
    }
}

Rat strip_integral(const std::vector<Copy>& copies, const Rat& t0, const Rat& t1) {
    // cut points where endpoints of two differently-sloped copies align mod 1
    std::vector<Rat> cuts{t0, t1};
    for (std::size_t i = 0; i < copies.size(); ++i)
        for (std::size_t j = i + 1; j < copies.size(); ++j) {
            Int dg = copies[i].g - copies[j].g;
            if (dg == 0) continue;
            for (const auto& [ei_lo, ei_hi] : copies[i].s_base)
                for (const auto& [ej_lo, ej_hi] : copies[j].s_base) {
                    for (const Rat& ei : {ei_lo, ei_hi})
                        for (const Rat& ej : {ej_lo, ej_hi}) {
                            // (ei - g_i t - w_i) == (ej - g_j t - w_j)  mod 1
                            Rat off = (ej - ei) + (copies[i].w - copies[j].w);
                            alignment_cuts(dg, off, t0, t1, cuts);
                        }
                }
        }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    Rat total(0);
    std::vector<std::vector<std::pair<Rat, Rat>>> unions(copies.size());
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
        Rat mid = (cuts[s] + cuts[s + 1]) / 2;
        for (std::size_t i = 0; i < copies.size(); ++i) {
            Rat v = Rat(copies[i].g) * mid + copies[i].w;
            unions[i].clear();
            for (const auto& [lo, hi] : copies[i].s_base) unions[i].emplace_back(lo - v, hi - v);
        }
        Rat len = circle_intersection_measure(unions);
        if (len != 0) total += (cuts[s + 1] - cuts[s]) * len;
    }
    return total;
}

Correlation correlation_d2(const UnipotentAffineMap& T, const BoxSet& A, const PolyFamily& f, const Int& n) {
    const Int& c = T.N[1][0];
    auto shifts = copy_shifts(f, n);

    std::vector<Copy> copies(shifts.size());
    for (std::size_t i = 0; i < shifts.size(); ++i) {
        const Int& m = shifts[i];
        copies[i].a = snap_frac(T.b[0] * Rat(m));
        copies[i].g = c * m;
        copies[i].w = snap_frac(T.b[1] * Rat(m) + T.b[0] * Rat(c * binom(m, 2)));
    }

    auto x_base = A.axis_intervals(0);
    bool full_x = x_base.size() == 1 && x_base[0].first == 0 && x_base[0].second == 1;

    if (full_x) {
        // no first-coordinate constraints: fold by the slope gcd and run one strip
        for (auto& cp : copies) cp.s_base = A.axis_intervals(1);
        Int g(0);
        for (const auto& cp : copies) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cp.g.get_mpz_t());
        if (g > 1)
            for (auto& cp : copies) cp.g /= g;
        return exact_result(strip_integral(copies, Rat(0), Rat(1)));
    }

    // first-coordinate strip boundaries: box x-endpoints pulled back by each copy
    std::vector<Rat> strip_cuts{Rat(0), Rat(1)};
    for (const auto& cp : copies)
        for (const auto& b : A.boxes())
            for (const Rat& e : {b.lo[0], b.hi[0]}) strip_cuts.push_back(frac_part(e - cp.a));
    std::sort(strip_cuts.begin(), strip_cuts.end());
    strip_cuts.erase(std::unique(strip_cuts.begin(), strip_cuts.end()), strip_cuts.end());

    Rat total(0);
    for (std::size_t s = 0; s + 1 < strip_cuts.size(); ++s) {
        const Rat& t0 = strip_cuts[s];
        const Rat& t1 = strip_cuts[s + 1];
        Rat tmid = (t0 + t1) / 2;
        bool alive = true;
        std::vector<Copy> local = copies;
        for (auto& cp : local) {
            Rat xpos = frac_part(tmid + cp.a);
            cp.s_base.clear();
            for (const auto& b : A.boxes())
                if (b.lo[0] <= xpos && xpos < b.hi[0]) cp.s_base.emplace_back(b.lo[1], b.hi[1]);
            if (cp.s_base.empty()) {
                alive = false;
                break;
            }
            std::sort(cp.s_base.begin(), cp.s_base.end());
        }
        if (!alive) continue;
        total += strip_integral(local, t0, t1);
    }
    return exact_result(total);
}

Correlation correlation_mc(const UnipotentAffineMap& T, const BoxSet& A, const PolyFamily& f, const Int& n,
                           long samples, unsigned long seed) {
    auto shifts = copy_shifts(f, n);
    OrbitPolynomial orbit = orbit_closed_form(T);
    std::size_t d = T.dim;

    // per shift: integer matrix and snapped translation of T^m
    struct AffinePow {
        std::vector<std::vector<double>> mat;  // entries reduced mod 1 is wrong for x-products; keep raw
        std::vector<double> cst;
    };
    std::vector<AffinePow> pows;
    for (const auto& m : shifts) {
        AffinePow ap;
        ap.mat.assign(d, std::vector<double>(d, 0.0));
        ap.cst.assign(d, 0.0);
        for (std::size_t j = 0; j < orbit.terms(); ++j) {
            Int cb = binom(m, static_cast<unsigned long>(j));
            if (cb == 0) continue;
            double cbd = cb.get_d();
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t k = 0; k < d; ++k)
                    ap.mat[i][k] += cbd * orbit.linear(j)[i][k].get_d();
        }
        // exact translation via symbolic evaluation at the zero point
        std::vector<SymbolicReal> zero(d);
        auto tz = orbit.evaluate(m, zero);
        for (std::size_t i = 0; i < d; ++i) ap.cst[i] = frac_part(tz[i].approx()).get_d();
        pows.push_back(std::move(ap));
    }

    // stratified sampling: jittered grid with floor(samples^(1/d)) cells per axis
    long grid = std::max(1L, static_cast<long>(std::floor(std::pow(static_cast<double>(samples), 1.0 / static_cast<double>(d)))));
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    long hits = 0, count = 0;
    std::vector<long> idx(d, 0);
    std::vector<double> x(d), y(d);
    for (;;) {
        for (std::size_t i = 0; i < d; ++i)
            x[i] = (static_cast<double>(idx[i]) + unif(rng)) / static_cast<double>(grid);
        ++count;
        bool in = true;
        for (std::size_t s = 0; s < pows.size() && in; ++s) {
            for (std::size_t i = 0; i < d; ++i) {
                double v = pows[s].cst[i];
                for (std::size_t k = 0; k < d; ++k) v += pows[s].mat[i][k] * x[k];
                y[i] = v - std::floor(v);
            }
            in = A.contains(y);
        }
        if (in) ++hits;
        // advance grid index
        std::size_t axis = 0;
        while (axis < d && ++idx[axis] == grid) {
            idx[axis] = 0;
            ++axis;
        }
        if (axis == d) break;
    }

    Correlation r;
    r.exact = false;
    double p = static_cast<double>(hits) / static_cast<double>(count);
    r.estimate = p;
    r.std_error = std::sqrt(std::max(p * (1.0 - p), 1e-12) / static_cast<double>(count));
    r.samples = count;
    r.seed = seed;
    return r;
}

}  // namespace

Correlation box_correlation(const UnipotentAffineMap& T, const BoxSet& A, const PolyFamily& f, const Int& n,
                            long resolution, unsigned long seed) {
    T.validate();
    if (resolution < 1) throw ArgumentError("box_correlation: resolution must be >= 1");
    if (A.dim() != T.dim) throw ArgumentError("box_correlation: box dimension must match the map");
    if (T.dim == 1) return correlation_d1(T, A, f, n);
    if (T.dim == 2) return correlation_d2(T, A, f, n);
    return correlation_mc(T, A, f, n, resolution, seed);
}

RestrictedAverage restricted_average(const UnipotentAffineMap& T, const BoxSet& A, const PolyFamily& f,
                                     const IntPolynomial& q1, const IntPolynomial& q2, const Rat& delta,
                                     long N) {
    T.validate();
    for (const auto& row : T.N)
        for (const auto& x : row)
            if (x != 0) throw ArgumentError("restricted_average: T must be a rotation");
    if (delta <= 0 || delta >= Rat(1, 2)) throw ArgumentError("restricted_average: delta in (0, 1/2) required");

    // membership sequences: {q_j(n) b_i} for each rotation coordinate
    std::vector<SymPoly> polys;
    for (const IntPolynomial* q : {&q1, &q2}) {
        if (q->is_constant()) throw ArgumentError("restricted_average: q1, q2 must be nonconstant");
        for (std::size_t i = 0; i < T.dim; ++i) {
            std::vector<SymbolicReal> cs(static_cast<std::size_t>(q->degree()) + 1);
            for (std::size_t j = 0; j < cs.size(); ++j) cs[j] = T.b[i] * Rat(q->coeff(j));
            polys.push_back(SymPoly(std::move(cs)));
        }
    }

    double dd = delta.get_d();
    auto keep = [dd](const std::vector<double>& vals) {
        for (double v : vals) {
            double dist = std::min(v, 1.0 - v);
            if (dist > dd) return false;
        }
        return true;
    };
    std::vector<long> sel = scan_select(polys, N, keep);

    RestrictedAverage res;
    res.mu_A = A.measure().get_d();
    res.sample_count = static_cast<long>(sel.size());
    if (sel.empty()) {
        res.has_samples = false;
        res.average = 0.0;
        return res;
    }
    res.has_samples = true;
    double acc = 0.0;
    for (long n : sel) acc += box_correlation(T, A, f, Int(n)).estimate;
    res.average = acc / static_cast<double>(sel.size());
    return res;
}

}  // namespace polyerg
