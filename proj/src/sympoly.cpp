#include "polyerg/sympoly.hpp"

#include <cmath>
#include <numbers>

namespace polyerg {

SymPoly& SymPoly::operator+=(const SymPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
    normalize();
    return *this;
}

SymPoly SymPoly::operator*(const Rat& s) const {
    std::vector<SymbolicReal> r = c_;
    for (auto& x : r) x *= s;
    return SymPoly(std::move(r));
}

SymPoly SymPoly::compose_int(const IntPolynomial& p) const {
    SymPoly acc;
    for (std::size_t j = c_.size(); j-- > 0;) {
        // acc = acc * p + c_[j]
        if (!acc.is_zero()) {
            std::vector<SymbolicReal> prod(static_cast<std::size_t>(acc.degree() + p.degree()) + 1);
            for (std::size_t a = 0; a < acc.c_.size(); ++a) {
                if (acc.c_[a].is_zero()) continue;
                for (std::size_t b = 0; b <= static_cast<std::size_t>(p.degree()); ++b)
                    if (p.coeff(b) != 0) prod[a + b] += acc.c_[a] * Rat(p.coeff(b));
            }
            acc = SymPoly(std::move(prod));
        }
        acc += SymPoly::constant(c_[j]);
    }
    return acc;
}

SymbolicReal SymPoly::evaluate(const Int& n) const {
    SymbolicReal acc;
    Rat nn(n);
    for (std::size_t j = c_.size(); j-- > 0;) {
        acc *= nn;
        acc += c_[j];
    }
    return acc;
}

std::vector<Rat> binomial_basis_poly(std::size_t j) {
    std::vector<Rat> b{Rat(1)};
    for (std::size_t i = 0; i < j; ++i) {
        // b *= (n - i) / (i + 1)
        std::vector<Rat> next(b.size() + 1, Rat(0));
        Rat shift(-static_cast<long>(i));
        Rat div(static_cast<long>(i) + 1);
        for (std::size_t k = 0; k < b.size(); ++k) {
            next[k + 1] += b[k] / div;
            next[k] += b[k] * shift / div;
        }
        b = std::move(next);
    }
    return b;
}

SymPoly character_phase(const OrbitPolynomial& orbit, const Character& chi,
                        const std::vector<SymbolicReal>& x) {
    if (chi.frequency.size() != orbit.dim()) throw ArgumentError("character_phase: frequency dimension mismatch");
    if (x.size() != orbit.dim()) throw ArgumentError("character_phase: point dimension mismatch");
    SymPoly total;
    for (std::size_t j = 0; j < orbit.terms(); ++j) {
        SymbolicReal cj;
        for (std::size_t i = 0; i < orbit.dim(); ++i) {
            if (chi.frequency[i] == 0) continue;
            SymbolicReal coord = orbit.shift(j)[i];
            for (std::size_t k = 0; k < orbit.dim(); ++k)
                if (orbit.linear(j)[i][k] != 0) coord += x[k] * Rat(orbit.linear(j)[i][k]);
            cj += coord * Rat(chi.frequency[i]);
        }
        if (cj.is_zero()) continue;
        std::vector<Rat> basis_poly = binomial_basis_poly(j);
        std::vector<SymbolicReal> term(basis_poly.size());
        for (std::size_t k = 0; k < basis_poly.size(); ++k)
            if (basis_poly[k] != 0) term[k] = cj * basis_poly[k];
        total += SymPoly(std::move(term));
    }
    return total;
}

std::complex<double> unit_phase(const SymbolicReal& x, const IrrationalBasis& basis) {
    double f = frac_part(x.approx(basis)).get_d();
    return std::polar(1.0, 2.0 * std::numbers::pi * f);
}

std::complex<double> phase_limit(const SymPoly& P, const IrrationalBasis& basis) {
    if (P.is_zero()) return {1.0, 0.0};
    for (std::size_t j = 1; j <= static_cast<std::size_t>(P.degree()); ++j)
        if (P.coeff(j).is_irrational()) return {0.0, 0.0};

    // all nonconstant coefficients rational: e(P(n)) is periodic with period
    // the lcm of their denominators; average one exact period
    Int D(1);
    for (std::size_t j = 1; j <= static_cast<std::size_t>(P.degree()); ++j)
        mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), P.coeff(j).rational_part().get_den().get_mpz_t());
    if (D > 10'000'000) throw ArgumentError("phase_limit: rational period too large to average");

    std::complex<double> rot = unit_phase(P.coeff(0), basis);
    std::complex<double> sum{0.0, 0.0};
    for (Int n = 0; n < D; ++n) {
        Rat v(0);
        for (std::size_t j = static_cast<std::size_t>(P.degree()); j >= 1; --j) {
            v += P.coeff(j).rational_part();
            v *= Rat(n);
            if (j == 1) break;
        }
        double f = frac_part(v).get_d();
        sum += std::polar(1.0, 2.0 * std::numbers::pi * f);
    }
    return rot * (sum / static_cast<double>(D.get_ui()));
}

}  // namespace polyerg
