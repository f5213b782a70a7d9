#pragma once

#include <map>
#include <string>
#include <vector>

#include "polyerg/arith.hpp"

namespace polyerg {

/// Declared list of irrationals spanning the symbolic arithmetic. Elements
/// are asserted (not verified) to be rationally independent; each carries a
/// high-precision decimal approximation stored as an exact rational.
class IrrationalBasis {
  public:
    struct Element {
        std::string name;
        Rat approx;  // exact rational snapshot of the decimal expansion
    };

    static const IrrationalBasis& standard();  // {sqrt2, sqrt3, sqrt5}

    explicit IrrationalBasis(std::vector<Element> elems) : elems_(std::move(elems)) {}

    std::size_t size() const { return elems_.size(); }
    const Element& operator[](std::size_t i) const { return elems_[i]; }
    int index_of(const std::string& name) const;  // -1 if absent

  private:
    std::vector<Element> elems_;
};

/// Exact rational plus exact-rational combination of basis irrationals.
/// Equality is componentwise. Ordering and floor go through the decimal
/// approximations, which is reliable far beyond the coefficient sizes this
/// project produces.
class SymbolicReal {
  public:
    SymbolicReal() = default;
    /*implicit*/ SymbolicReal(Rat q) : rat_(std::move(q)) {}
    /*implicit*/ SymbolicReal(const Int& z) : rat_(Rat(z)) {}
    /*implicit*/ SymbolicReal(long v) : rat_(Rat(v)) {}

    static SymbolicReal basis_element(std::size_t index, const Rat& coeff = Rat(1)) {
        SymbolicReal x;
        if (coeff != 0) x.irr_[index] = coeff;
        return x;
    }
    static SymbolicReal sqrt2() { return basis_element(0); }
    static SymbolicReal sqrt3() { return basis_element(1); }
    static SymbolicReal sqrt5() { return basis_element(2); }

    const Rat& rational_part() const { return rat_; }
    const std::map<std::size_t, Rat>& irr_coeffs() const { return irr_; }

    bool is_rational() const { return irr_.empty(); }
    bool is_irrational() const { return !irr_.empty(); }
    bool is_zero() const { return rat_ == 0 && irr_.empty(); }

    SymbolicReal& operator+=(const SymbolicReal& o);
    SymbolicReal& operator-=(const SymbolicReal& o);
    SymbolicReal& operator*=(const Rat& s);

    friend SymbolicReal operator+(SymbolicReal a, const SymbolicReal& b) { return a += b; }
    friend SymbolicReal operator-(SymbolicReal a, const SymbolicReal& b) { return a -= b; }
    friend SymbolicReal operator-(const SymbolicReal& a) {
        SymbolicReal r;
        return r -= a;
    }
    friend SymbolicReal operator*(const Rat& s, SymbolicReal a) { return a *= s; }
    friend SymbolicReal operator*(SymbolicReal a, const Rat& s) { return a *= s; }
    bool operator==(const SymbolicReal& o) const { return rat_ == o.rat_ && irr_ == o.irr_; }

    /// Exact rational approximation through the basis decimals.
    Rat approx(const IrrationalBasis& basis = IrrationalBasis::standard()) const;
    double to_double(const IrrationalBasis& basis = IrrationalBasis::standard()) const;

    /// floor(value); exact for rationals, via approximation otherwise.
    Int floor_value(const IrrationalBasis& basis = IrrationalBasis::standard()) const;
    /// value - floor(value), a SymbolicReal in [0, 1).
    SymbolicReal frac(const IrrationalBasis& basis = IrrationalBasis::standard()) const;

    /// Three-way comparison through approximations, exact on equality.
    int compare(const SymbolicReal& o, const IrrationalBasis& basis = IrrationalBasis::standard()) const;
    bool less_than(const SymbolicReal& o, const IrrationalBasis& basis = IrrationalBasis::standard()) const {
        return compare(o, basis) < 0;
    }

    std::string str(const IrrationalBasis& basis = IrrationalBasis::standard()) const;

  private:
    Rat rat_{0};
    std::map<std::size_t, Rat> irr_;  // basis index -> coefficient, no zeros
};

}  // namespace polyerg
