#include "polyerg/classify.hpp"

#include <algorithm>

namespace polyerg {

std::string to_string(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::LinearlyIndependent: return "LinearlyIndependent";
        case FamilyTag::E1: return "E1";
        case FamilyTag::E2: return "E2";
        case FamilyTag::E3: return "E3";
        case FamilyTag::Generic: return "Generic";
    }
    return "?";
}

std::string FactorClass::str() const {
    switch (label) {
        case FactorLabel::KRat: return "KRat";
        case FactorLabel::Kronecker: return "Kronecker";
        case FactorLabel::Affine2: return "Affine2";
        case FactorLabel::Nil2: return "Nil2";
        case FactorLabel::NilK: return "NilK(" + std::to_string(k) + ")";
    }
    return "?";
}

namespace {

void require_triple(const PolyFamily& f, const char* who) {
    if (f.size() != 3) throw ArgumentError(std::string(who) + ": family of exactly 3 members required");
}

void require_essentially_distinct(const PolyFamily& f, const char* who) {
    if (!essentially_distinct(f)) throw ArgumentError(std::string(who) + ": family is not essentially distinct");
}

// q as an exact rational multiple of the primitive polynomial p, if it is one.
std::optional<Rat> rational_multiple_of(const IntPolynomial& q, const IntPolynomial& p) {
    if (q.is_zero()) return Rat(0);
    if (q.degree() != p.degree()) return std::nullopt;
    Rat lambda = Rat(q.leading()) / Rat(p.leading());
    for (std::size_t j = 0; j <= static_cast<std::size_t>(p.degree()); ++j)
        if (Rat(q.coeff(j)) != lambda * Rat(p.coeff(j))) return std::nullopt;
    return lambda;
}

// q = k*p^2 + r*p solved exactly over Q; nullopt if q is outside the span.
std::optional<std::pair<Rat, Rat>> in_span_p_p2(const IntPolynomial& q, const IntPolynomial& p) {
    IntPolynomial p2 = p * p;
    long top = std::max({q.degree(), p2.degree(), p.degree()});
    // two unknowns, solve from the leading coefficients of p^2 and p, then verify
    if (q.degree() > p2.degree()) return std::nullopt;
    Rat k = Rat(q.coeff(static_cast<std::size_t>(p2.degree()))) / Rat(p2.leading());
    IntPolynomial rest_num;  // q - k*p^2, kept over Q via scaled integers
    // r = (q - k p^2) / p, checked coefficientwise over Q
    Rat r(0);
    {
        // compute q - k*p^2 symbolically: coefficients c_j = q_j - k * p2_j
        long dp = p.degree();
        // determine r from the leading surviving coefficient if any
        std::vector<Rat> c(static_cast<std::size_t>(top) + 1, Rat(0));
        bool all_zero = true;
        for (long j = 0; j <= top; ++j) {
            c[static_cast<std::size_t>(j)] =
                Rat(q.coeff(static_cast<std::size_t>(j))) - k * Rat(p2.coeff(static_cast<std::size_t>(j)));
            all_zero &= c[static_cast<std::size_t>(j)] == 0;
        }
        if (!all_zero) {
            long dc = top;
            while (dc >= 0 && c[static_cast<std::size_t>(dc)] == 0) --dc;
            if (dc != dp) return std::nullopt;
            r = c[static_cast<std::size_t>(dc)] / Rat(p.leading());
            for (long j = 0; j <= top; ++j)
                if (c[static_cast<std::size_t>(j)] != r * Rat(p.coeff(static_cast<std::size_t>(j))))
                    return std::nullopt;
        }
    }
    return std::make_pair(k, r);
}

bool all_integers(std::initializer_list<Rat> xs) {
    for (const auto& x : xs)
        if (x.get_den() != 1) return false;
    return true;
}

constexpr std::array<std::array<int, 3>, 6> kPerms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

}  // namespace

std::optional<E12Solution> solve_e12_system(const PolyFamily& f) {
    require_triple(f, "solve_e12_system");
    auto t = f.tilde();
    const IntPolynomial &p1 = t[0], &p2 = t[1], &p3 = t[2];
    IntPolynomial sq[3] = {p1 * p1, p2 * p2, p3 * p3};

    long dmax = 0;
    for (const auto& q : sq) dmax = std::max(dmax, q.degree());
    for (const auto& q : t) dmax = std::max(dmax, q.degree());

    // Unknowns (k1,l1,m1,k2,l2,m2). One row per power of n in each equation;
    // constant terms vanish identically since the tilde members do.
    std::size_t nrows = 2 * static_cast<std::size_t>(dmax);
    QMatrix m(nrows, 6);
    std::size_t row = 0;
    for (long j = 1; j <= dmax; ++j, ++row)
        for (int i = 0; i < 3; ++i) m.at(row, static_cast<std::size_t>(i)) = Rat(t[static_cast<std::size_t>(i)].coeff(static_cast<std::size_t>(j)));
    for (long j = 1; j <= dmax; ++j, ++row) {
        for (int i = 0; i < 3; ++i) {
            m.at(row, static_cast<std::size_t>(i)) = Rat(sq[i].coeff(static_cast<std::size_t>(j)));
            m.at(row, static_cast<std::size_t>(i) + 3) = Rat(t[static_cast<std::size_t>(i)].coeff(static_cast<std::size_t>(j)));
        }
    }

    for (const auto& v : m.nullspace()) {
        if (v[0] == 0 && v[1] == 0 && v[2] == 0) continue;
        std::vector<Int> w = primitive_integer_vector(v);
        E12Solution sol;
        std::copy(w.begin(), w.end(), sol.v.begin());
        return sol;
    }
    return std::nullopt;
}

WeylComplexity weyl_complexity_3(const PolyFamily& f) {
    require_triple(f, "weyl_complexity_3");
    require_essentially_distinct(f, "weyl_complexity_3");
    if (linear_rank(f) == 3) return {1};
    if (solve_e12_system(f)) return {3};
    return {2};
}

WeylComplexity weyl_complexity_2(const PolyFamily& f) {
    if (f.size() != 2) throw ArgumentError("weyl_complexity_2: family of exactly 2 members required");
    require_essentially_distinct(f, "weyl_complexity_2");
    return {linear_rank(f) == 2 ? 1 : 2};
}

FamilyType detect_family_type(const PolyFamily& f) {
    require_triple(f, "detect_family_type");
    require_essentially_distinct(f, "detect_family_type");
    auto t = f.tilde();

    // E1: all members rational multiples of one primitive polynomial.
    {
        IntPolynomial p = primitive_decompose(t[0]).prim;
        std::optional<Rat> c0 = rational_multiple_of(t[0], p);
        std::optional<Rat> c1 = rational_multiple_of(t[1], p);
        std::optional<Rat> c2 = rational_multiple_of(t[2], p);
        if (c0 && c1 && c2) {
            FamilyWitness w;
            w.p = p;
            w.l = *c0;
            w.m = *c1;
            w.r = *c2;
            w.integer_certified = all_integers({w.l, w.m, w.r});
            return {FamilyTag::E1, w};
        }
    }

    // E2: two members multiples of a primitive p, third equal to
    // k*p^2 + r*p with k != 0. Lexicographically first permutation wins.
    for (const auto& perm : kPerms) {
        const IntPolynomial& a = t[static_cast<std::size_t>(perm[0])];
        const IntPolynomial& b = t[static_cast<std::size_t>(perm[1])];
        const IntPolynomial& c = t[static_cast<std::size_t>(perm[2])];
        IntPolynomial p = primitive_decompose(a).prim;
        std::optional<Rat> la = rational_multiple_of(a, p);
        std::optional<Rat> lb = rational_multiple_of(b, p);
        if (!la || !lb) continue;
        auto kr = in_span_p_p2(c, p);
        if (!kr || kr->first == 0) continue;
        FamilyWitness w;
        w.p = p;
        w.l = *la;
        w.m = *lb;
        w.k = kr->first;
        w.r = kr->second;
        w.permutation = perm;
        w.integer_certified = all_integers({w.k, w.l, w.m, w.r});
        return {FamilyTag::E2, w};
    }

    // E3: pairwise differences proportional to a primitive p, each member in
    // span{p, p^2} with one common nonzero p^2 coefficient.
    {
        IntPolynomial d01 = t[0] - t[1];
        IntPolynomial p = primitive_decompose(d01).prim;
        bool diffs_ok = rational_multiple_of(t[0] - t[2], p).has_value() &&
                        rational_multiple_of(t[1] - t[2], p).has_value();
        if (diffs_ok) {
            auto s0 = in_span_p_p2(t[0], p);
            auto s1 = in_span_p_p2(t[1], p);
            auto s2 = in_span_p_p2(t[2], p);
            if (s0 && s1 && s2 && s0->first != 0 && s0->first == s1->first && s1->first == s2->first) {
                FamilyWitness w;
                w.p = p;
                w.k = s0->first;
                w.l = s0->second;
                w.m = s1->second;
                w.r = s2->second;
                w.integer_certified = all_integers({w.k, w.l, w.m, w.r});
                return {FamilyTag::E3, w};
            }
        }
    }

    if (linear_rank(f) == 3) return {FamilyTag::LinearlyIndependent, std::nullopt};
    return {FamilyTag::Generic, std::nullopt};
}

FactorClass smallest_factor(const PolyFamily& f) {
    require_triple(f, "smallest_factor");
    require_essentially_distinct(f, "smallest_factor");
    FamilyType ty = detect_family_type(f);
    int w = weyl_complexity_3(f).value;
    bool exceptional_type = ty.tag == FamilyTag::E1 || ty.tag == FamilyTag::E2 || ty.tag == FamilyTag::E3;
    if (exceptional_type != (w == 3))
        throw std::logic_error("smallest_factor: type detector and complexity solver disagree");
    if ((ty.tag == FamilyTag::LinearlyIndependent) != (w == 1))
        throw std::logic_error("smallest_factor: rank test and complexity solver disagree");
    switch (ty.tag) {
        case FamilyTag::LinearlyIndependent: return {FactorLabel::KRat};
        case FamilyTag::E1: return {FactorLabel::Nil2};
        case FamilyTag::E2:
        case FamilyTag::E3: return {FactorLabel::Affine2};
        case FamilyTag::Generic: return {FactorLabel::Kronecker};
    }
    throw std::logic_error("smallest_factor: unreachable");
}

FactorClass smallest_factor_multiple(const std::vector<Int>& multipliers, const IntPolynomial& p) {
    if (p.is_constant()) throw ArgumentError("smallest_factor_multiple: p must be nonconstant");
    if (multipliers.empty()) throw ArgumentError("smallest_factor_multiple: at least one multiplier required");
    for (std::size_t i = 0; i < multipliers.size(); ++i) {
        if (multipliers[i] == 0) throw ArgumentError("smallest_factor_multiple: zero multiplier");
        for (std::size_t j = i + 1; j < multipliers.size(); ++j)
            if (multipliers[i] == multipliers[j]) throw ArgumentError("smallest_factor_multiple: repeated multiplier");
    }
    std::size_t k = multipliers.size();
    if (k == 1) return {FactorLabel::KRat};
    return {FactorLabel::NilK, static_cast<int>(k) - 1};
}

bool lower_bound_exceptional(const PolyFamily& f) {
    require_triple(f, "lower_bound_exceptional");
    for (const auto& p : f.members())
        if (p.constant_term() != 0) throw ArgumentError("lower_bound_exceptional: members must have zero constant term");
    require_essentially_distinct(f, "lower_bound_exceptional");
    FamilyType ty = detect_family_type(f);
    if (ty.tag == FamilyTag::E2 || ty.tag == FamilyTag::E3) return true;
    if (ty.tag != FamilyTag::E1) return false;
    std::array<Rat, 3> c{ty.witness->l, ty.witness->m, ty.witness->r};
    std::sort(c.begin(), c.end());
    return c[2] != c[0] + c[1];
}

}  // namespace polyerg
