#include "polyerg/congruence.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>

namespace polyerg {

std::string to_string(CongruenceStatus s) {
    switch (s) {
        case CongruenceStatus::CertifiedSolvable: return "CertifiedSolvable";
        case CongruenceStatus::UnsolvableWitness: return "UnsolvableWitness";
        case CongruenceStatus::InconclusiveUpTo: return "InconclusiveUpTo";
    }
    return "?";
}

std::vector<Int> primes_up_to(const Int& bound) {
    std::vector<Int> out;
    if (bound < 2) return out;
    unsigned long b = bound.get_ui();
    std::vector<bool> sieve(b + 1, true);
    for (unsigned long i = 2; i <= b; ++i) {
        if (!sieve[i]) continue;
        out.emplace_back(i);
        for (unsigned long j = i * i; j <= b; j += i) sieve[j] = false;
    }
    return out;
}

namespace {

constexpr unsigned long kScanLimit = 1u << 20;
constexpr std::size_t kRootSetLimit = 1u << 16;

std::set<Int> roots_by_scan(const std::vector<IntPolynomial>& ps, const Int& m) {
    std::set<Int> out;
    for (Int n = 0; n < m; ++n) {
        bool ok = true;
        for (const auto& p : ps)
            if (mod_floor(p(n), m) != 0) {
                ok = false;
                break;
            }
        if (ok) out.insert(n);
    }
    return out;
}

// Roots mod q^e by exhaustive branch lifting from roots mod q.
std::set<Int> roots_prime_power(const std::vector<IntPolynomial>& ps, const Int& q, long e) {
    std::set<Int> cur = roots_by_scan(ps, q);
    Int mod = q;
    for (long lvl = 2; lvl <= e; ++lvl) {
        Int next_mod = mod * q;
        std::set<Int> next;
        for (const Int& r : cur) {
            for (Int t = 0; t < q; ++t) {
                Int cand = r + t * mod;
                bool ok = true;
                for (const auto& p : ps)
                    if (mod_floor(p(cand), next_mod) != 0) {
                        ok = false;
                        break;
                    }
                if (ok) next.insert(cand);
            }
        }
        if (next.size() > kRootSetLimit)
            throw ArgumentError("roots_mod: root set too large to enumerate at modulus " + next_mod.get_str());
        cur = std::move(next);
        mod = next_mod;
        if (cur.empty()) break;
    }
    return cur;
}

struct Factorization {
    std::vector<std::pair<Int, long>> factors;
};

Factorization factorize(Int m) {
    Factorization f;
    for (Int d = 2; d * d <= m; ++d) {
        if (m % d != 0) continue;
        long e = 0;
        while (m % d == 0) {
            m /= d;
            ++e;
        }
        f.factors.emplace_back(d, e);
        if (f.factors.size() > 64) throw ArgumentError("roots_mod: modulus has too many prime factors");
    }
    if (m > 1) f.factors.emplace_back(m, 1);
    return f;
}

std::set<Int> roots_general(const std::vector<IntPolynomial>& ps, const Int& m) {
    if (m == 1) return {Int(0)};
    if (m <= Int(kScanLimit)) return roots_by_scan(ps, m);
    Factorization f = factorize(m);
    // CRT combination of per-prime-power root sets
    std::set<Int> acc{Int(0)};
    Int acc_mod(1);
    for (const auto& [q, e] : f.factors) {
        Int pe = ipow(q, static_cast<unsigned long>(e));
        std::set<Int> part = pe <= Int(kScanLimit) ? roots_by_scan(ps, pe) : roots_prime_power(ps, q, e);
        if (part.empty()) return {};
        std::set<Int> merged;
        Int new_mod = acc_mod * pe;
        // x = a mod acc_mod, x = b mod pe
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), acc_mod.get_mpz_t(), pe.get_mpz_t()) == 0)
            throw std::logic_error("roots_mod: CRT moduli not coprime");
        for (const Int& a : acc)
            for (const Int& b : part) {
                Int t = mod_floor((b - a) * inv, pe);
                merged.insert(a + acc_mod * t);
            }
        if (merged.size() > kRootSetLimit)
            throw ArgumentError("roots_mod: root set too large to enumerate at modulus " + new_mod.get_str());
        acc = std::move(merged);
        acc_mod = new_mod;
    }
    return acc;
}

}  // namespace

std::set<Int> roots_mod(const IntPolynomial& p, const Int& m) {
    if (m < 1) throw ArgumentError("roots_mod: modulus must be >= 1");
    return roots_general({p}, m);
}

std::set<Int> joint_roots_mod(const std::vector<IntPolynomial>& ps, const Int& m) {
    if (m < 1) throw ArgumentError("roots_mod: modulus must be >= 1");
    return roots_general(ps, m);
}

namespace {

bool is_prime(const Int& q) { return mpz_probab_prime_p(q.get_mpz_t(), 30) != 0; }

// Core certification loop. Roots are lifted on `wit` (the polynomial whose
// witness/root sets the verdict is about) while the Newton condition is
// evaluated on `cert` (squarefree, same q-adic roots in the limit).
PrimeCertResult certify_core(const IntPolynomial& wit, const IntPolynomial& cert, const Int& q,
                             long exponent_cap) {
    IntPolynomial dcert = cert.derivative();
    std::set<Int> roots = roots_by_scan({wit}, q);
    Int mod = q;
    for (long e = 1; e <= exponent_cap; ++e) {
        if (roots.empty()) return {std::nullopt, mod, false};
        for (const Int& n0 : roots) {
            Int fv = cert(n0);
            if (fv == 0)
                return {HenselCertificate{q, n0, kValInf, valuation(dcert(n0), q), true, e}, std::nullopt, false};
            long vf = valuation(fv, q);
            long vdf = valuation(dcert(n0), q);
            if (vdf != kValInf && vf > 2 * vdf)
                return {HenselCertificate{q, n0, vf, vdf, true, e}, std::nullopt, false};
        }
        if (e == exponent_cap) break;
        // lift roots of wit to the next level
        Int next_mod = mod * q;
        std::set<Int> next;
        for (const Int& r : roots)
            for (Int t = 0; t < q; ++t) {
                Int cand = r + t * mod;
                if (mod_floor(wit(cand), next_mod) == 0) next.insert(cand);
            }
        if (next.size() > kRootSetLimit) return {std::nullopt, std::nullopt, true};
        roots = std::move(next);
        mod = next_mod;
    }
    return {std::nullopt, std::nullopt, true};
}

CongruenceVerdict run_verdict(const std::vector<IntPolynomial>& ps, const Int& prime_bound, long exponent_cap) {
    for (const auto& p : ps)
        if (p.is_constant()) throw ArgumentError("congruence verdict: polynomials must be nonconstant");
    if (exponent_cap < 1) throw ArgumentError("congruence verdict: exponent cap must be >= 1");

    // Newton conditions are evaluated on the squarefree kernel of the gcd
    // (for one polynomial, of the polynomial itself): its q-adic roots are
    // exactly the simultaneous q-adic roots.
    IntPolynomial g = ps[0];
    for (std::size_t i = 1; i < ps.size(); ++i) g = poly_gcd(g, ps[i]);
    IntPolynomial cert_poly = g.is_constant() ? g : radical(g);

    std::vector<Int> primes = primes_up_to(prime_bound);
    std::vector<PrimeCertResult> results(primes.size());

#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(primes.size()); ++i) {
        const Int& q = primes[static_cast<std::size_t>(i)];
        if (ps.size() == 1) {
            results[static_cast<std::size_t>(i)] = certify_core(ps[0], radical(ps[0]), q, exponent_cap);
        } else {
            // joint lifting: track simultaneous roots, certify on the gcd kernel
            IntPolynomial dcert = cert_poly.derivative();
            std::set<Int> roots = roots_by_scan(ps, q);
            Int mod = q;
            PrimeCertResult res;
            res.inconclusive = true;
            for (long e = 1; e <= exponent_cap; ++e) {
                if (roots.empty()) {
                    res = {std::nullopt, mod, false};
                    break;
                }
                bool done = false;
                if (!cert_poly.is_constant()) {
                    for (const Int& n0 : roots) {
                        Int fv = cert_poly(n0);
                        long vdf = valuation(dcert(n0), q);
                        if (fv == 0) {
                            res = {HenselCertificate{q, n0, kValInf, vdf, true, e}, std::nullopt, false};
                            done = true;
                            break;
                        }
                        long vf = valuation(fv, q);
                        if (vdf != kValInf && vf > 2 * vdf) {
                            res = {HenselCertificate{q, n0, vf, vdf, true, e}, std::nullopt, false};
                            done = true;
                            break;
                        }
                    }
                }
                if (done || e == exponent_cap) break;
                Int next_mod = mod * q;
                std::set<Int> next;
                for (const Int& r : roots)
                    for (Int t = 0; t < q; ++t) {
                        Int cand = r + t * mod;
                        bool ok = true;
                        for (const auto& p : ps)
                            if (mod_floor(p(cand), next_mod) != 0) {
                                ok = false;
                                break;
                            }
                        if (ok) next.insert(cand);
                    }
                if (next.size() > kRootSetLimit) break;
                roots = std::move(next);
                mod = next_mod;
            }
            results[static_cast<std::size_t>(i)] = res;
        }
    }

    // deterministic merge by ascending prime
    CongruenceVerdict v;
    v.checked_prime_bound = prime_bound;
    v.checked_exponent_cap = exponent_cap;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const auto& r = results[i];
        if (r.witness) {
            v.status = CongruenceStatus::UnsolvableWitness;
            v.witness_modulus = r.witness;
            return v;
        }
        if (r.certificate)
            v.certificates.emplace(primes[i], *r.certificate);
        else
            v.inconclusive_primes.push_back(primes[i]);
    }
    v.status = v.inconclusive_primes.empty() ? CongruenceStatus::CertifiedSolvable
                                             : CongruenceStatus::InconclusiveUpTo;
    return v;
}

}  // namespace

PrimeCertResult certify_prime(const IntPolynomial& p, const Int& q, long exponent_cap) {
    if (!is_prime(q)) throw ArgumentError("certify_prime: q must be prime");
    if (exponent_cap < 1) throw ArgumentError("certify_prime: exponent cap must be >= 1");
    return certify_core(p, radical(p), q, exponent_cap);
}

CongruenceVerdict intersective_verdict(const IntPolynomial& p, const Int& prime_bound, long exponent_cap) {
    return run_verdict({p}, prime_bound, exponent_cap);
}

CongruenceVerdict joint_verdict(const PolyFamily& f, const Int& prime_bound, long exponent_cap) {
    if (f.size() != 3) throw ArgumentError("joint_verdict: family of exactly 3 members required");
    return run_verdict(f.members(), prime_bound, exponent_cap);
}

}  // namespace polyerg
