#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polyerg/averages.hpp"
#include "polyerg/poly_parse.hpp"
#include "polyerg/spans.hpp"

using namespace polyerg;

namespace {

IntPolynomial P(const std::string& s) { return parse_polynomial(s); }

VectorPolynomial vp(std::size_t dim, std::size_t basis_index, std::vector<IntPolynomial> coords) {
    VectorPolynomial u;
    u.dim = dim;
    u.irr.emplace(basis_index, std::move(coords));
    return u;
}

}  // namespace

TEST_CASE("span_closure worked examples") {
    auto dense = span_closure(vp(2, 0, {P("n"), P("n^2")}));
    CHECK(dense.rank() == 2);
    CHECK(dense.dense());

    auto line = span_closure(vp(2, 0, {P("n"), P("2*n")}));
    CHECK(line.rank() == 1);
    CHECK_FALSE(line.dense());

    auto zero = span_closure(vp(2, 0, {P("0"), P("0")}));
    CHECK(zero.rank() == 0);
    CHECK_FALSE(zero.dense());
}

TEST_CASE("substitution_invariance worked examples") {
    auto u = vp(2, 0, {P("n"), P("n^2")});
    CHECK(substitution_invariance(u, P("n^2")));
    CHECK(substitution_invariance(u, P("n+7")));
    CHECK(substitution_invariance(vp(2, 0, {P("n"), P("2*n")}), P("n^3")));
    CHECK_THROWS_AS(substitution_invariance(u, P("7")), ArgumentError);
}

TEST_CASE("substitution_invariance holds on a random corpus") {
    std::mt19937_64 rng(71);
    std::uniform_int_distribution<int> coeff(-4, 4), degd(1, 3), dimd(1, 3);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t m = static_cast<std::size_t>(dimd(rng));
        VectorPolynomial u;
        u.dim = m;
        for (std::size_t b = 0; b < 2; ++b) {
            std::vector<IntPolynomial> coords;
            for (std::size_t i = 0; i < m; ++i) {
                int d = degd(rng);
                std::vector<Int> c(static_cast<std::size_t>(d) + 1);
                for (auto& x : c) x = coeff(rng);
                coords.emplace_back(std::move(c));
            }
            u.irr.emplace(b, std::move(coords));
        }
        int d = degd(rng);
        std::vector<Int> pc(static_cast<std::size_t>(d) + 1, Int(0));
        for (auto& x : pc) x = coeff(rng);
        if (pc.back() == 0) pc.back() = 1;
        IntPolynomial p{std::move(pc)};
        if (p.is_constant()) continue;
        CHECK(substitution_invariance(u, p));
    }
}

TEST_CASE("product_density worked examples") {
    auto u1 = vp(1, 0, {P("n")});
    CHECK(product_density(SymbolicReal::sqrt2(), u1, P("n^2")));
    CHECK_FALSE(product_density(SymbolicReal::sqrt2(), u1, P("n")));
    CHECK(product_density(SymbolicReal::sqrt2(), u1, P("n^3")));
    CHECK_FALSE(product_density(SymbolicReal(Rat(1, 2)), u1, P("n^2")));
}

TEST_CASE("density verdicts match empirical box counting") {
    // pairs (u, p) whose orbit {(u(p(n)) a)} is checked against a 16^2 grid
    struct Case {
        VectorPolynomial u;
        IntPolynomial p;
    };
    std::vector<Case> cases;
    cases.push_back({vp(2, 0, {P("n"), P("n^2")}), P("n")});
    cases.push_back({vp(2, 0, {P("n"), P("n^2")}), P("n^2")});
    cases.push_back({vp(2, 0, {P("n"), P("2*n")}), P("n")});
    cases.push_back({vp(2, 0, {P("n"), P("n^3")}), P("n+1")});
    cases.push_back({vp(2, 1, {P("2*n"), P("n^2+n")}), P("n")});
    cases.push_back({vp(2, 0, {P("3*n"), P("6*n")}), P("n^2")});

    for (const auto& c : cases) {
        VectorPolynomial sub = c.u.substitute(c.p);
        bool verdict = span_closure(sub).dense();

        // step the two coordinates and count visited 16x16 bins
        std::vector<SymPoly> coords;
        for (std::size_t i = 0; i < 2; ++i) {
            SymPoly acc;
            for (const auto& [idx, cs] : sub.irr) {
                std::vector<SymbolicReal> sc(static_cast<std::size_t>(cs[i].degree()) + 1);
                for (std::size_t j = 0; j < sc.size(); ++j)
                    sc[j] = SymbolicReal::basis_element(idx, Rat(cs[i].coeff(j)));
                acc += SymPoly(std::move(sc));
            }
            coords.push_back(acc);
        }
        std::vector<bool> hit(16 * 16, false);
        DiffTable t0(coords[0], Int(0)), t1(coords[1], Int(0));
        for (long n = 0; n < 100'000; ++n) {
            int b0 = std::min(15, static_cast<int>(t0.value() * 16));
            int b1 = std::min(15, static_cast<int>(t1.value() * 16));
            hit[static_cast<std::size_t>(b0 * 16 + b1)] = true;
            t0.step();
            t1.step();
        }
        bool all_hit = std::find(hit.begin(), hit.end(), false) == hit.end();
        CHECK(all_hit == verdict);
    }
}
