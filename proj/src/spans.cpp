#include "polyerg/spans.hpp"

namespace polyerg {

VectorPolynomial VectorPolynomial::substitute(const IntPolynomial& p) const {
    VectorPolynomial out;
    out.dim = dim;
    for (const auto& [idx, coords] : irr) {
        std::vector<IntPolynomial> c;
        c.reserve(coords.size());
        for (const auto& q : coords) c.push_back(q.compose(p));
        out.irr.emplace(idx, std::move(c));
    }
    for (const auto& q : rational_term) out.rational_term.push_back(q.compose(p));
    return out;
}

SpanDescriptor span_closure(const VectorPolynomial& u) {
    std::vector<std::vector<Rat>> rows;
    for (const auto& [idx, coords] : u.irr) {
        if (coords.size() != u.dim) throw ArgumentError("span_closure: coordinate count mismatch");
        long maxdeg = 0;
        for (const auto& q : coords) maxdeg = std::max(maxdeg, q.degree());
        for (long j = 0; j <= maxdeg; ++j) {
            std::vector<Rat> row(u.dim);
            bool nonzero = false;
            for (std::size_t i = 0; i < u.dim; ++i) {
                row[i] = Rat(coords[i].coeff(static_cast<std::size_t>(j)));
                nonzero |= row[i] != 0;
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }

    QMatrix m(rows.size(), u.dim);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < u.dim; ++c) m.at(r, c) = rows[r][c];
    m.rref();

    SpanDescriptor d;
    d.dim = u.dim;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::vector<Rat> row(u.dim);
        bool nonzero = false;
        for (std::size_t c = 0; c < u.dim; ++c) {
            row[c] = m.at(r, c);
            nonzero |= row[c] != 0;
        }
        if (nonzero) d.basis.push_back(std::move(row));
    }
    return d;
}

bool substitution_invariance(const VectorPolynomial& u, const IntPolynomial& p) {
    if (p.is_constant()) throw ArgumentError("substitution_invariance: p must be nonconstant");
    return span_closure(u.substitute(p)) == span_closure(u);
}

bool product_density(const SymbolicReal& beta, const VectorPolynomial& u, const IntPolynomial& p) {
    if (!beta.is_irrational()) return false;
    if (p.degree() <= 1) return false;
    return span_closure(u.substitute(p)).dense();
}

}  // namespace polyerg
