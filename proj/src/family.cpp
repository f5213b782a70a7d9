#include "polyerg/family.hpp"

#include "polyerg/qmatrix.hpp"

namespace polyerg {

bool essentially_distinct(const PolyFamily& f) {
    const auto& m = f.members();
    for (const auto& p : m)
        if (p.is_constant()) return false;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if ((m[i] - m[j]).is_constant()) return false;
    return true;
}

int linear_rank(const PolyFamily& f) {
    auto t = f.tilde();
    long maxdeg = 0;
    for (const auto& p : t) maxdeg = std::max(maxdeg, p.degree());
    if (maxdeg < 0) return 0;
    QMatrix m(t.size(), static_cast<std::size_t>(maxdeg) + 1);
    for (std::size_t r = 0; r < t.size(); ++r)
        for (std::size_t c = 0; c <= static_cast<std::size_t>(maxdeg); ++c) m.at(r, c) = Rat(t[r].coeff(c));
    return static_cast<int>(m.rank());
}

PolyFamily shift_reduce(const PolyFamily& f) {
    if (f.size() != 3) throw ArgumentError("shift_reduce: family of 3 required");
    const auto& m = f.members();
    return PolyFamily({m[0] - m[2], m[1] - m[2], -m[2]});
}

}  // namespace polyerg
