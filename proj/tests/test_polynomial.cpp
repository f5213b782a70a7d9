#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polyerg/family.hpp"
#include "polyerg/poly_parse.hpp"
#include "polyerg/polynomial.hpp"
#include "support/oracles.hpp"

using namespace polyerg;

namespace {

IntPolynomial P(const std::string& s) { return parse_polynomial(s); }

}  // namespace

TEST_CASE("parser handles the CLI syntax") {
    CHECK(P("n^2") == IntPolynomial::monomial(Int(1), 2));
    CHECK(P("(n^2-13)*(n^2-17)*(n^2-221)")(Int(0)) == Int(13) * Int(17) * Int(221) * Int(-1));
    CHECK(P(" 2*n + 3 ")(Int(5)) == 13);
    CHECK(P("-n^3")(Int(2)) == -8);
    CHECK(P("n - n") == IntPolynomial());
    CHECK(P("2*(n+1)^2")(Int(3)) == 32);
    CHECK_THROWS_AS(P("n^"), ArgumentError);
    CHECK_THROWS_AS(P("x+1"), ArgumentError);
    CHECK_THROWS_AS(P("(n"), ArgumentError);
}

TEST_CASE("compose_affine worked examples") {
    CHECK(compose_affine(P("n^2"), Int(2), Int(1)) == P("4*n^2+4*n+1"));
    CHECK(compose_affine(P("n"), Int(1), Int(0)) == P("n"));
    CHECK(compose_affine(P("n^2+n"), Int(3), Int(0)) == P("9*n^2+3*n"));
    CHECK_THROWS_AS(compose_affine(P("n"), Int(0), Int(0)), ArgumentError);
    CHECK_THROWS_AS(compose_affine(P("n"), Int(2), Int(2)), ArgumentError);
}

TEST_CASE("compose_affine composition identity") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> rd(1, 5), coeff(-9, 9), degd(0, 6);
    for (int trial = 0; trial < 200; ++trial) {
        int d = degd(rng);
        std::vector<Int> c(static_cast<std::size_t>(d) + 1);
        for (auto& x : c) x = coeff(rng);
        IntPolynomial p{std::move(c)};
        long r1 = rd(rng), r2 = rd(rng);
        long s1 = std::uniform_int_distribution<long>(0, r1 - 1)(rng);
        long s2 = std::uniform_int_distribution<long>(0, r2 - 1)(rng);
        IntPolynomial lhs = compose_affine(compose_affine(p, Int(r1), Int(s1)), Int(r2), Int(s2));
        IntPolynomial rhs = compose_affine(p, Int(r1 * r2), Int(r1 * s2 + s1));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("primitive_decompose worked examples") {
    auto d1 = primitive_decompose(P("6*n^2+4*n"));
    CHECK(d1.sign == 1);
    CHECK(d1.content == 2);
    CHECK(d1.prim == P("3*n^2+2*n"));

    auto d2 = primitive_decompose(P("-3*n"));
    CHECK(d2.sign == -1);
    CHECK(d2.content == 3);
    CHECK(d2.prim == P("n"));

    auto d3 = primitive_decompose(P("n^3"));
    CHECK(d3.sign == 1);
    CHECK(d3.content == 1);
    CHECK(d3.prim == P("n^3"));

    CHECK_THROWS_AS(primitive_decompose(IntPolynomial()), ArgumentError);
}

TEST_CASE("primitive_decompose round-trips") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> coeff(-40, 40), degd(0, 8);
    for (int trial = 0; trial < 300; ++trial) {
        int d = degd(rng);
        std::vector<Int> c(static_cast<std::size_t>(d) + 1);
        for (auto& x : c) x = coeff(rng);
        IntPolynomial p{std::move(c)};
        if (p.is_zero()) continue;
        auto dec = primitive_decompose(p);
        CHECK(Int(dec.sign) * dec.content * dec.prim == p);
        CHECK(dec.prim.content() == 1);
        CHECK(dec.prim.leading() > 0);
    }
}

TEST_CASE("essentially_distinct") {
    CHECK_FALSE(essentially_distinct(PolyFamily({P("n"), P("n+1")})));
    CHECK(essentially_distinct(PolyFamily({P("n"), P("2*n")})));
    CHECK(essentially_distinct(PolyFamily({P("n^2"), P("n^2+n"), P("n")})));
    CHECK_FALSE(essentially_distinct(PolyFamily({P("n"), P("7")})));
}

TEST_CASE("linear_rank worked examples") {
    CHECK(linear_rank(PolyFamily({P("n"), P("n^2"), P("n^3")})) == 3);
    CHECK(linear_rank(PolyFamily({P("n"), P("2*n"), P("n^2")})) == 2);
    CHECK(linear_rank(PolyFamily({P("n"), P("2*n"), P("3*n")})) == 1);
}

TEST_CASE("linear_rank invariances") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        PolyFamily f = oracles::random_family(rng, 5, 9);
        int rank = linear_rank(f);
        auto m = f.members();
        std::sort(m.begin(), m.end(), [](const IntPolynomial& a, const IntPolynomial& b) {
            return a.coeffs() < b.coeffs();
        });
        CHECK(linear_rank(PolyFamily(m)) == rank);
        long c = std::uniform_int_distribution<long>(1, 5)(rng);
        std::size_t which = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
        auto scaled = f.members();
        scaled[which] = Int(c) * scaled[which];
        CHECK(linear_rank(PolyFamily(scaled)) == rank);
    }
}

TEST_CASE("shift_reduce worked examples") {
    PolyFamily a({P("n^2+n"), P("n^2+2*n"), P("n^2+3*n")});
    auto ra = shift_reduce(a).members();
    CHECK(ra[0] == P("-2*n"));
    CHECK(ra[1] == P("-n"));
    CHECK(ra[2] == P("-n^2-3*n"));

    PolyFamily b({P("n"), P("2*n"), P("3*n")});
    auto rb = shift_reduce(b).members();
    CHECK(rb[0] == P("-2*n"));
    CHECK(rb[1] == P("-n"));
    CHECK(rb[2] == P("-3*n"));

    PolyFamily c({P("n"), P("n^2"), P("n^3")});
    auto rc = shift_reduce(c).members();
    CHECK(rc[0] == P("n-n^3"));
    CHECK(rc[1] == P("n^2-n^3"));
    CHECK(rc[2] == P("-n^3"));
}

TEST_CASE("tilde members recomputed with zero constant term") {
    PolyFamily f({P("n^2+5"), P("3*n-7"), P("n^3+n+1")});
    for (const auto& t : f.tilde()) CHECK(t.constant_term() == 0);
}

TEST_CASE("poly_gcd and radical") {
    CHECK(poly_gcd(P("n^2-1"), P("n^2+2*n+1")) == P("n+1"));
    CHECK(poly_gcd(P("2*n"), P("3*n^2")) == P("n"));
    CHECK(radical(P("(n-1)*(n-1)")) == P("n-1"));
    CHECK(radical(P("(n-1)*(n-1)*(n+2)")) == P("(n-1)*(n+2)"));
    CHECK(radical(P("n^2+1")) == P("n^2+1"));
}
