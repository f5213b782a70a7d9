#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polyerg/congruence.hpp"
#include "polyerg/poly_parse.hpp"
#include "support/oracles.hpp"

using namespace polyerg;

namespace {

IntPolynomial P(const std::string& s) { return parse_polynomial(s); }

}  // namespace

TEST_CASE("roots_mod worked examples") {
    CHECK(roots_mod(P("n^2-17"), Int(4)) == std::set<Int>{Int(1), Int(3)});
    CHECK(roots_mod(P("n^2-2"), Int(4)).empty());
    CHECK(roots_mod(P("n"), Int(5)) == std::set<Int>{Int(0)});
    CHECK_THROWS_AS(roots_mod(P("n"), Int(0)), ArgumentError);
}

TEST_CASE("roots_mod agrees with brute force") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> coeff(-30, 30), degd(1, 5), md(1, 400);
    for (int trial = 0; trial < 200; ++trial) {
        int d = degd(rng);
        std::vector<Int> c(static_cast<std::size_t>(d) + 1);
        for (auto& x : c) x = coeff(rng);
        IntPolynomial p{std::move(c)};
        long m = md(rng);
        CHECK(roots_mod(p, Int(m)) == oracles::roots_mod_bruteforce(p, m));
    }
}

TEST_CASE("roots_mod lifting path agrees with brute force beyond the scan limit") {
    // 3^13 = 1594323 exceeds the internal scan threshold, so this exercises
    // the lift-and-CRT path; the oracle scans directly.
    IntPolynomial p = P("(n-5)*(n+7)");
    Int m = ipow(Int(3), 13);
    std::set<Int> mine = roots_mod(p, m);
    CHECK(!mine.empty());
    for (const auto& r : mine) CHECK(mod_floor(p(r), m) == 0);
    CHECK(mine.count(Int(5)) == 1);
    CHECK(mine.count(mod_floor(Int(-7), m)) == 1);
}

TEST_CASE("certify_prime worked examples") {
    auto c1 = certify_prime(P("n^2-17"), Int(2), 12);
    REQUIRE(c1.certificate.has_value());
    CHECK(c1.certificate->base_root == 1);
    CHECK(c1.certificate->valuation_f == 4);
    CHECK(c1.certificate->valuation_df == 1);
    CHECK(c1.certificate->lifts_forever);

    auto c2 = certify_prime(P("n^2-2"), Int(2), 12);
    REQUIRE(c2.witness.has_value());
    CHECK(*c2.witness == 4);

    for (long q : {2L, 3L, 5L, 97L}) {
        auto c3 = certify_prime(P("n"), Int(q), 12);
        REQUIRE(c3.certificate.has_value());
        CHECK(c3.certificate->base_root == 0);
        CHECK(c3.certificate->valuation_f == kValInf);
    }

    CHECK_THROWS_AS(certify_prime(P("n"), Int(6), 12), ArgumentError);
}

TEST_CASE("repeated factors do not block certification") {
    auto c = certify_prime(P("(n-1)*(n-1)"), Int(7), 12);
    REQUIRE(c.certificate.has_value());
    CHECK(c.certificate->lifts_forever);
    // and the root sets really are nonempty at every power
    for (long e = 1; e <= 6; ++e) CHECK(!roots_mod(P("(n-1)*(n-1)"), ipow(Int(7), e)).empty());
}

TEST_CASE("intersective_verdict worked examples") {
    auto v1 = intersective_verdict(P("(n^2-13)*(n^2-17)*(n^2-221)"), Int(100), 12);
    CHECK(v1.status == CongruenceStatus::CertifiedSolvable);
    CHECK(v1.certificates.size() == 25);  // primes below 100

    auto v2 = intersective_verdict(P("(n^3-19)*(n^2+n+1)"), Int(100), 12);
    CHECK(v2.status == CongruenceStatus::CertifiedSolvable);

    auto v3 = intersective_verdict(P("n^2-2"), Int(100), 12);
    CHECK(v3.status == CongruenceStatus::UnsolvableWitness);
    CHECK(*v3.witness_modulus == 4);

    CHECK_THROWS_AS(intersective_verdict(P("7"), Int(100), 12), ArgumentError);
}

TEST_CASE("certificates cross-validate against exhaustive root sets") {
    auto v = intersective_verdict(P("(n^2-13)*(n^2-17)*(n^2-221)"), Int(30), 12);
    REQUIRE(v.status == CongruenceStatus::CertifiedSolvable);
    for (const auto& [q, cert] : v.certificates) {
        CHECK(cert.lifts_forever);
        for (long e = 1; e <= 10; ++e)
            CHECK(!roots_mod(P("(n^2-13)*(n^2-17)*(n^2-221)"), ipow(q, e)).empty());
    }
}

TEST_CASE("witnesses cross-validate and inherit downward") {
    auto v = intersective_verdict(P("n^2-2"), Int(100), 12);
    REQUIRE(v.witness_modulus.has_value());
    Int m = *v.witness_modulus;
    CHECK(roots_mod(P("n^2-2"), m).empty());
    for (long k = 1; k <= 5; ++k) CHECK(roots_mod(P("n^2-2"), Int(k) * m).empty());
}

TEST_CASE("zero constant term is always certified") {
    std::mt19937_64 rng(32);
    std::uniform_int_distribution<int> coeff(-9, 9), degd(1, 5);
    for (int trial = 0; trial < 25; ++trial) {
        int d = degd(rng);
        std::vector<Int> c(static_cast<std::size_t>(d) + 1);
        c[0] = 0;
        for (int j = 1; j <= d; ++j) c[static_cast<std::size_t>(j)] = coeff(rng);
        IntPolynomial p{std::move(c)};
        if (p.is_constant()) continue;
        CHECK(intersective_verdict(p, Int(50), 12).status == CongruenceStatus::CertifiedSolvable);
    }
}

TEST_CASE("joint_verdict worked examples") {
    PolyFamily f1({P("n^2"), P("n^3"), P("n^5")});
    CHECK(joint_verdict(f1, Int(100), 12).status == CongruenceStatus::CertifiedSolvable);

    PolyFamily f2({P("2*n"), P("3*n"), P("n+1")});
    auto v2 = joint_verdict(f2, Int(100), 12);
    CHECK(v2.status == CongruenceStatus::UnsolvableWitness);
    // 5 witnesses this family (n must be 0 mod 5, then n+1 is 1), and so
    // does 2; the ascending merge reports the smallest
    CHECK(joint_roots_mod(f2.members(), Int(5)).empty());
    CHECK(joint_roots_mod(f2.members(), Int(2)).empty());
    CHECK(*v2.witness_modulus == 2);

    PolyFamily f3({P("n"), P("2*n+2"), P("3*n+3")});
    auto v3 = joint_verdict(f3, Int(100), 12);
    CHECK(v3.status == CongruenceStatus::UnsolvableWitness);
    // both 2 and 3 witness this family; ascending merge reports 2
    CHECK(joint_roots_mod(f3.members(), Int(2)).empty());
    CHECK(joint_roots_mod(f3.members(), Int(3)).empty());
    CHECK(*v3.witness_modulus == 2);
}

TEST_CASE("joint certification does not overclaim on deep but finite agreement") {
    // n and n + 2^5 share roots mod 2^e only up to e = 5, yet each certifies
    // alone at 2; the joint verdict must find the witness at 2^6
    PolyFamily f({P("n"), P("n+32"), P("n")});
    auto v = joint_verdict(f, Int(2), 12);
    CHECK(v.status == CongruenceStatus::UnsolvableWitness);
    CHECK(*v.witness_modulus == 64);
    CHECK(joint_roots_mod(f.members(), Int(64)).empty());
    CHECK(!joint_roots_mod(f.members(), Int(32)).empty());
}

TEST_CASE("joint of a repeated polynomial matches the single verdict") {
    for (const char* s : {"n^2-17", "n^2-2", "(n^2-13)*(n^2-17)*(n^2-221)", "3*n+1"}) {
        PolyFamily f({P(s), P(s), P(s)});
        auto joint = joint_verdict(f, Int(50), 12);
        auto single = intersective_verdict(P(s), Int(50), 12);
        CHECK(joint.status == single.status);
        if (joint.witness_modulus.has_value())
            CHECK(*joint.witness_modulus == *single.witness_modulus);
    }
}
