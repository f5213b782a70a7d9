#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "polyerg/family.hpp"
#include "polyerg/polynomial.hpp"

namespace polyerg {

/// Per-prime certificate that p(n) = 0 (mod q^e) is solvable for every e.
/// Issued at a base root n0 once the Newton condition v(p(n0)) > 2 v(p'(n0))
/// holds (valuations taken on the squarefree kernel), or when n0 is an exact
/// integer root.
struct HenselCertificate {
    Int prime;
    Int base_root;
    long valuation_f;   // kValInf encodes an exact root
    long valuation_df;
    bool lifts_forever;
    long level;  // exponent e at which the certificate was found
};

enum class CongruenceStatus { CertifiedSolvable, UnsolvableWitness, InconclusiveUpTo };

std::string to_string(CongruenceStatus s);

struct CongruenceVerdict {
    CongruenceStatus status;
    std::optional<Int> witness_modulus;            // present iff UnsolvableWitness
    std::map<Int, HenselCertificate> certificates; // by prime
    std::vector<Int> inconclusive_primes;
    Int checked_prime_bound;
    long checked_exponent_cap;
};

/// Exhaustive root set {n in [0, m) : p(n) = 0 mod m}. Computed by direct
/// scan for small m and by prime-power lifting plus CRT for large m; throws
/// if the root set would be gigantic (p vanishing identically modulo a big m).
std::set<Int> roots_mod(const IntPolynomial& p, const Int& m);

/// Simultaneous roots of several polynomials mod m.
std::set<Int> joint_roots_mod(const std::vector<IntPolynomial>& ps, const Int& m);

struct PrimeCertResult {
    std::optional<HenselCertificate> certificate;
    std::optional<Int> witness;  // q^e with no roots
    bool inconclusive = false;
};

PrimeCertResult certify_prime(const IntPolynomial& p, const Int& q, long exponent_cap);

/// Theorem-style verdict for a single polynomial: whether p(n) = 0 mod m is
/// solvable for every m, certified over all primes <= prime_bound and all
/// their powers. A witness is a genuine disproof; certification is scoped to
/// the checked bound.
CongruenceVerdict intersective_verdict(const IntPolynomial& p, const Int& prime_bound, long exponent_cap);

/// Same verdict for the simultaneous system p1 = p2 = p3 = 0 (mod m).
CongruenceVerdict joint_verdict(const PolyFamily& f, const Int& prime_bound, long exponent_cap);

std::vector<Int> primes_up_to(const Int& bound);

}  // namespace polyerg
