#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace polyerg {

using Int = mpz_class;
using Rat = mpq_class;

// Thrown on violated preconditions of public operations; the CLI maps it
// to exit code 2.
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline int sign(const Int& x) { return sgn(x); }

inline Int ipow(Int base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// C(n, k) for arbitrary-precision n, k >= 0.
inline Int binom(const Int& n, unsigned long k) {
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

// x mod m reduced into [0, m).
inline Int mod_floor(const Int& x, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Fractional part of a rational, in [0, 1).
inline Rat frac_part(const Rat& q) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return q - Rat(fl);
}

inline Int floor_rat(const Rat& q) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return fl;
}

// q-adic valuation; q > 1. Returns -1 for x == 0 (caller treats it as +inf).
inline long valuation(Int x, const Int& q) {
    if (x == 0) return -1;
    long v = 0;
    Int r, quo;
    for (;;) {
        mpz_fdiv_qr(quo.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), q.get_mpz_t());
        if (r != 0) return v;
        x = quo;
        ++v;
    }
}

constexpr long kValInf = -1;  // sentinel returned by valuation() for 0

inline bool val_greater(long a, long b) {
    // a > b with -1 acting as +infinity
    if (a == kValInf) return b != kValInf;
    if (b == kValInf) return false;
    return a > b;
}

}  // namespace polyerg
