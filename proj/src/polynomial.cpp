#include "polyerg/polynomial.hpp"

#include <sstream>

namespace polyerg {

std::string IntPolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = c_.size(); j-- > 0;) {
        const Int& a = c_[j];
        if (a == 0) continue;
        Int mag = abs(a);
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        if (j == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << "*";
            os << "n";
            if (j > 1) os << "^" << j;
        }
    }
    return os.str();
}

IntPolynomial compose_affine(const IntPolynomial& p, const Int& r, const Int& s) {
    if (r < 1) throw ArgumentError("compose_affine: r must be >= 1");
    if (s < 0 || s >= r) throw ArgumentError("compose_affine: need 0 <= s < r");
    IntPolynomial lin({s, r});
    return p.compose(lin);
}

PrimitiveParts primitive_decompose(const IntPolynomial& p) {
    if (p.is_zero()) throw ArgumentError("primitive_decompose: no primitive part of the zero polynomial");
    Int cont = p.content();
    int sg = sign(p.leading());
    std::vector<Int> c(p.coeffs());
    for (auto& x : c) x = x * sg / cont;
    return PrimitiveParts{sg, cont, IntPolynomial(std::move(c))};
}

IntPolynomial strip_constant(const IntPolynomial& p) {
    return p - IntPolynomial::constant(p.constant_term());
}

namespace {

// Primitive pseudo-remainder Euclid; inputs nonzero.
IntPolynomial gcd_primitive(IntPolynomial a, IntPolynomial b) {
    a = primitive_decompose(a).prim;
    b = primitive_decompose(b).prim;
    while (!b.is_zero()) {
        // pseudo-remainder of a by b
        IntPolynomial r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
            IntPolynomial t = b.leading() * r - r.leading() * (b * IntPolynomial::monomial(Int(1), shift));
            r = t;
        }
        a = b;
        b = r.is_zero() ? IntPolynomial() : primitive_decompose(r).prim;
    }
    return a;
}

}  // namespace

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero()) return primitive_decompose(b).prim;
    if (b.is_zero()) return primitive_decompose(a).prim;
    return gcd_primitive(a, b);
}

IntPolynomial radical(const IntPolynomial& p) {
    if (p.is_zero() || p.is_constant()) return p;
    IntPolynomial g = poly_gcd(p, p.derivative());
    if (g.is_constant()) return primitive_decompose(p).prim;
    // exact division p / g, done over Q then verified integral
    IntPolynomial q;
    IntPolynomial rem = p;
    std::vector<Rat> out(static_cast<std::size_t>(p.degree() - g.degree()) + 1, Rat(0));
    std::vector<Rat> r(rem.coeffs().size());
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = Rat(rem.coeff(j));
    long dg = g.degree();
    for (long d = static_cast<long>(r.size()) - 1; d >= dg; --d) {
        Rat lead = r[static_cast<std::size_t>(d)];
        if (lead == 0) continue;
        Rat f = lead / Rat(g.leading());
        out[static_cast<std::size_t>(d - dg)] = f;
        for (long j = 0; j <= dg; ++j)
            r[static_cast<std::size_t>(d - dg + j)] -= f * Rat(g.coeff(static_cast<std::size_t>(j)));
    }
    std::vector<Int> ic(out.size());
    for (std::size_t j = 0; j < out.size(); ++j) ic[j] = out[j].get_num();  // denominators are 1 here
    return primitive_decompose(IntPolynomial(std::move(ic))).prim;
}

}  // namespace polyerg
