#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "polyerg/averages.hpp"
#include "polyerg/poly_parse.hpp"
#include "polyerg/sympoly.hpp"

using namespace polyerg;

namespace {

IntPolynomial P(const std::string& s) { return parse_polynomial(s); }

SymPoly sym_poly(std::vector<SymbolicReal> cs) { return SymPoly(std::move(cs)); }

}  // namespace

TEST_CASE("phase_limit worked examples") {
    // sqrt2 * n^2 -> 0
    SymPoly p1 = sym_poly({SymbolicReal(), SymbolicReal(), SymbolicReal::sqrt2()});
    CHECK(std::abs(phase_limit(p1)) == 0.0);

    // n/2 -> 0 (period-2 average of +-1)
    SymPoly p2 = sym_poly({SymbolicReal(), SymbolicReal(Rat(1, 2))});
    CHECK(std::abs(phase_limit(p2)) < 1e-15);

    // constant c -> e(c)
    SymPoly p3 = sym_poly({SymbolicReal(Rat(1, 3))});
    std::complex<double> want = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    CHECK(std::abs(phase_limit(p3) - want) < 1e-12);
}

TEST_CASE("phase_limit equals brute-force period averaging for rational phases") {
    std::mt19937_64 rng(51);
    std::uniform_int_distribution<int> den(1, 24), num(-10, 10), degd(1, 4);
    for (int trial = 0; trial < 100; ++trial) {
        int d = degd(rng);
        std::vector<SymbolicReal> cs(static_cast<std::size_t>(d) + 1);
        long D = 1;
        for (int j = 0; j <= d; ++j) {
            Rat c(num(rng), den(rng));
            c.canonicalize();
            cs[static_cast<std::size_t>(j)] = SymbolicReal(c);
            if (j >= 1) D = std::lcm(D, static_cast<long>(c.get_den().get_ui()));
        }
        SymPoly p = sym_poly(cs);

        std::complex<double> brute{0, 0};
        long window = 4 * D;  // any multiple of the period gives the exact limit
        for (long n = 0; n < window; ++n) {
            Rat v(0);
            for (int j = d; j >= 0; --j) v = v * Rat(n) + cs[static_cast<std::size_t>(j)].rational_part();
            brute += std::polar(1.0, 2.0 * std::numbers::pi * frac_part(v).get_d());
        }
        brute /= static_cast<double>(window);
        CHECK(std::abs(phase_limit(p) - brute) < 1e-9);
    }
}

TEST_CASE("difference tables track exact evaluation at distance") {
    std::mt19937_64 rng(52);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 9);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<SymbolicReal> cs(7);  // degree 6
        for (auto& c : cs) {
            Rat q(num(rng), den(rng));
            q.canonicalize();
            c = SymbolicReal(q) + SymbolicReal::basis_element(static_cast<std::size_t>(trial % 3), Rat(num(rng), 3));
        }
        SymPoly p = sym_poly(cs);
        DiffTable t(p, Int(0));
        long stop = 1'000'000;
        for (long n = 0; n < stop; ++n) t.step();
        double exact = frac_part(p.evaluate(Int(stop)).approx()).get_d();
        double diff = std::abs(t.value() - exact);
        diff = std::min(diff, 1.0 - diff);  // circle distance
        CHECK(diff < 1e-9);
    }
}

TEST_CASE("serial and parallel kernels agree and the parallel kernel is deterministic") {
    SymPoly p = sym_poly({SymbolicReal(), SymbolicReal::sqrt2(), SymbolicReal(Rat(1, 3)),
                          SymbolicReal::basis_element(1, Rat(2, 7))});
    auto serial = average_unit_phases_serial({p}, 0, 300'000);
    auto par1 = average_unit_phases_parallel({p}, 0, 300'000);
    auto par2 = average_unit_phases_parallel({p}, 0, 300'000);
    CHECK(std::abs(serial - par1) < 1e-9);
    CHECK(par1 == par2);
}

TEST_CASE("trivial characters average to exactly one") {
    UnipotentAffineMap T = UnipotentAffineMap::rotation({SymbolicReal::sqrt2()});
    PolyFamily fam({P("n"), P("n^2")});
    std::vector<Character> chars(2);
    chars[0].frequency = {Int(0)};
    chars[1].frequency = {Int(0)};
    auto v = empirical_multiple_average(T, fam, chars, {0.25}, 0, 1000);
    CHECK(v.real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(v.imag() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("single-term averages") {
    UnipotentAffineMap T = UnipotentAffineMap::rotation({SymbolicReal::sqrt2()});
    PolyFamily fam({P("n")});
    std::vector<Character> chars(1);
    chars[0].frequency = {Int(1)};
    auto v = empirical_multiple_average(T, fam, chars, {0.0}, 7, 8);
    // exactly e(7 sqrt2)
    double want = frac_part((SymbolicReal::sqrt2() * Rat(7)).approx()).get_d();
    CHECK(std::abs(v - std::polar(1.0, 2 * std::numbers::pi * want)) < 1e-12);
}

TEST_CASE("canceling frequencies give a nonzero exact limit") {
    // phases 2(x + n a) - (x + 2n a) = x: every term equals e(x)
    UnipotentAffineMap T = UnipotentAffineMap::rotation({SymbolicReal::sqrt2()});
    PolyFamily fam({P("n"), P("2*n")});
    std::vector<Character> chars(2);
    chars[0].frequency = {Int(2)};
    chars[1].frequency = {Int(-1)};
    double x0 = 0.3125;
    auto emp = empirical_multiple_average(T, fam, chars, {x0}, 0, 4096);
    auto ana = analytic_multiple_limit(T, fam, chars, exact_point({x0}));
    std::complex<double> want = std::polar(1.0, 2 * std::numbers::pi * x0);
    CHECK(std::abs(ana - want) < 1e-12);
    CHECK(std::abs(emp - ana) < 1e-12);
}

TEST_CASE("empirical approaches the analytic limit on mixed cases") {
    UnipotentAffineMap R = UnipotentAffineMap::rotation({SymbolicReal::sqrt2()});
    UnipotentAffineMap S = UnipotentAffineMap::skew2(SymbolicReal::sqrt2(), Int(2), SymbolicReal::sqrt2());

    struct Case {
        UnipotentAffineMap T;
        PolyFamily fam;
        std::vector<Character> chars;
        std::vector<double> x0;
    };
    std::vector<Case> cases;
    {
        std::vector<Character> c(3);
        c[0].frequency = {Int(1)};
        c[1].frequency = {Int(1)};
        c[2].frequency = {Int(1)};
        cases.push_back({R, PolyFamily({P("n"), P("n^2"), P("n^3")}), c, {0.0}});
    }
    {
        std::vector<Character> c(3);
        c[0].frequency = {Int(0), Int(1)};
        c[1].frequency = {Int(0), Int(1)};
        c[2].frequency = {Int(0), Int(-1)};
        cases.push_back({S, PolyFamily({P("n"), P("2*n"), P("2*n^2+n")}), c, {0.2, 0.7}});
    }
    {
        std::vector<Character> c(2);
        c[0].frequency = {Int(0), Int(2)};
        c[1].frequency = {Int(0), Int(-1)};
        cases.push_back({S, PolyFamily({P("n"), P("n^2")}), c, {0.1, 0.4}});
    }
    for (const auto& cs : cases) {
        auto ana = analytic_multiple_limit(cs.T, cs.fam, cs.chars, exact_point(cs.x0));
        auto emp = empirical_multiple_average(cs.T, cs.fam, cs.chars, cs.x0, 0, 200'000);
        CHECK(std::abs(emp - ana) < 0.05);
    }
}

TEST_CASE("weighted average with h = 1 equals the unweighted average") {
    UnipotentAffineMap T = UnipotentAffineMap::rotation({SymbolicReal::sqrt2()});
    PolyFamily fam({P("n^2"), P("2*n^2")});
    std::vector<Character> chars(2);
    chars[0].frequency = {Int(1)};
    chars[1].frequency = {Int(1)};
    auto res = weighted_average(T, fam, chars, StepFunction::one(), SymbolicReal::sqrt3(), {0.0}, 50'000);
    CHECK(res.weighted == res.unweighted);
    CHECK(res.h_integral == 1.0);
    CHECK(res.factorization_hypothesis_met);
}

TEST_CASE("weighted average reproduces the half-window factorization") {
    UnipotentAffineMap T = UnipotentAffineMap::rotation({SymbolicReal::sqrt2()});
    PolyFamily fam({P("n^2"), P("2*n^2")});
    std::vector<Character> chars(2);
    chars[0].frequency = {Int(1)};
    chars[1].frequency = {Int(1)};
    StepFunction h = StepFunction::indicator(Rat(1, 4), Rat(3, 4));
    auto res = weighted_average(T, fam, chars, h, SymbolicReal::sqrt2(), {0.0}, 400'000);
    std::complex<double> product = res.unweighted * res.h_integral;
    CHECK(std::abs(res.weighted - product) < 0.03);
}

TEST_CASE("weighted average flags a violated hypothesis") {
    UnipotentAffineMap T = UnipotentAffineMap::rotation({SymbolicReal::sqrt2()});
    PolyFamily fam({P("n"), P("2*n")});
    std::vector<Character> chars(2);
    chars[0].frequency = {Int(1)};
    chars[1].frequency = {Int(1)};
    auto res = weighted_average(T, fam, chars, StepFunction::indicator(Rat(1, 4), Rat(3, 4)),
                                SymbolicReal::sqrt2(), {0.0}, 1000);
    CHECK_FALSE(res.factorization_hypothesis_met);
}
