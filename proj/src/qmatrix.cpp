#include "polyerg/qmatrix.hpp"

#include <algorithm>

namespace polyerg {

std::vector<std::size_t> QMatrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t pr = row;
        while (pr < rows_ && at(pr, col) == 0) ++pr;
        if (pr == rows_) continue;
        if (pr != row)
            for (std::size_t c = 0; c < cols_; ++c) std::swap(at(row, c), at(pr, c));
        Rat inv = Rat(1) / at(row, col);
        for (std::size_t c = col; c < cols_; ++c) at(row, c) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || at(r, col) == 0) continue;
            Rat f = at(r, col);
            for (std::size_t c = col; c < cols_; ++c) at(r, c) -= f * at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<Rat>> QMatrix::nullspace() const {
    QMatrix m(*this);
    std::vector<std::size_t> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (std::size_t fc = 0; fc < cols_; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rat> v(cols_, Rat(0));
        v[fc] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Int> primitive_integer_vector(const std::vector<Rat>& v) {
    Int den(1);
    for (const auto& q : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Int> w(v.size());
    Int g(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        w[i] = Int(v[i].get_num() * (den / v[i].get_den()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
    }
    if (g == 0) return w;
    int sg = 0;
    for (const auto& x : w)
        if (x != 0) {
            sg = sign(x);
            break;
        }
    for (auto& x : w) x = x * sg / g;
    return w;
}

bool same_row_space(const std::vector<std::vector<Rat>>& a, const std::vector<std::vector<Rat>>& b,
                    std::size_t width) {
    auto rref_of = [width](const std::vector<std::vector<Rat>>& rows) {
        QMatrix m(rows.size(), width);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < width; ++c) m.at(r, c) = rows[r][c];
        m.rref();
        std::vector<std::vector<Rat>> out;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            std::vector<Rat> row(width);
            bool nonzero = false;
            for (std::size_t c = 0; c < width; ++c) {
                row[c] = m.at(r, c);
                nonzero |= row[c] != 0;
            }
            if (nonzero) out.push_back(std::move(row));
        }
        return out;
    };
    return rref_of(a) == rref_of(b);
}

}  // namespace polyerg
