#include "polyerg/symbolic.hpp"

#include <sstream>

namespace polyerg {

namespace {

Rat rat_from_decimal(const std::string& s) {
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rat(Int(s));
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    Int num(digits);
    Int den = ipow(Int(10), static_cast<unsigned long>(s.size() - dot - 1));
    Rat r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace

const IrrationalBasis& IrrationalBasis::standard() {
    // 160 significant digits; coefficients in this project stay far below
    // the precision headroom these leave for floor and sign decisions.
    static const IrrationalBasis basis({
        {"sqrt2",
         rat_from_decimal("1.4142135623730950488016887242096980785696718753769480731766797379907324784621070388"
                          "5038753432764157273501384623091229702492483605585073721264412149709993583141322")},
        {"sqrt3",
         rat_from_decimal("1.7320508075688772935274463415058723669428052538103806280558069794519330169088000370"
                          "8114618675724857567562614141540670302996994509499895247881165551209437364852809")},
        {"sqrt5",
         rat_from_decimal("2.2360679774997896964091736687312762354406183596115257242708972454105209256378048994"
                          "1441440837878227496950817615077378350425326772444707386358636012153345270886678")},
    });
    return basis;
}

int IrrationalBasis::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < elems_.size(); ++i)
        if (elems_[i].name == name) return static_cast<int>(i);
    return -1;
}

SymbolicReal& SymbolicReal::operator+=(const SymbolicReal& o) {
    rat_ += o.rat_;
    for (const auto& [i, c] : o.irr_) {
        Rat& dst = irr_[i];
        dst += c;
        if (dst == 0) irr_.erase(i);
    }
    return *this;
}

SymbolicReal& SymbolicReal::operator-=(const SymbolicReal& o) {
    rat_ -= o.rat_;
    for (const auto& [i, c] : o.irr_) {
        Rat& dst = irr_[i];
        dst -= c;
        if (dst == 0) irr_.erase(i);
    }
    return *this;
}

SymbolicReal& SymbolicReal::operator*=(const Rat& s) {
    if (s == 0) {
        rat_ = 0;
        irr_.clear();
        return *this;
    }
    rat_ *= s;
    for (auto& [i, c] : irr_) c *= s;
    return *this;
}

Rat SymbolicReal::approx(const IrrationalBasis& basis) const {
    Rat a = rat_;
    for (const auto& [i, c] : irr_) a += c * basis[i].approx;
    return a;
}

double SymbolicReal::to_double(const IrrationalBasis& basis) const { return approx(basis).get_d(); }

Int SymbolicReal::floor_value(const IrrationalBasis& basis) const {
    if (is_rational()) return floor_rat(rat_);
    return floor_rat(approx(basis));
}

SymbolicReal SymbolicReal::frac(const IrrationalBasis& basis) const {
    SymbolicReal r = *this;
    r.rat_ -= Rat(floor_value(basis));
    return r;
}

int SymbolicReal::compare(const SymbolicReal& o, const IrrationalBasis& basis) const {
    if (*this == o) return 0;
    Rat d = approx(basis) - o.approx(basis);
    // componentwise-unequal values whose approximations tie differ only by
    // basis truncation; treat the approximation order as the order
    return d < 0 ? -1 : (d > 0 ? 1 : 0);
}

std::string SymbolicReal::str(const IrrationalBasis& basis) const {
    std::ostringstream os;
    bool first = true;
    if (rat_ != 0 || irr_.empty()) {
        os << rat_.get_str();
        first = false;
    }
    for (const auto& [i, c] : irr_) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        first = false;
        Rat mag = abs(c);
        if (mag != 1) os << mag.get_str() << "*";
        os << basis[i].name;
    }
    return os.str();
}

}  // namespace polyerg
