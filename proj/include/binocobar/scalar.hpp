#pragma once
#include <gmpxx.h>

#include "binocobar/errors.hpp"

namespace binocobar {

using Int = mpz_class;
using Rat = mpq_class; // kept canonical: lowest terms, positive denominator

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw error("DivisionByZero", "rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool rat_is_int(const Rat& q) { return q.get_den() == 1; }

inline Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e >= 0) {
        Rat r;
        mpq_class b = base;
        mpz_pow_ui(r.get_num().get_mpz_t(), b.get_num().get_mpz_t(), (unsigned long)e);
        mpz_pow_ui(r.get_den().get_mpz_t(), b.get_den().get_mpz_t(), (unsigned long)e);
        r.canonicalize();
        return r;
    }
    if (base == 0) throw error("DivisionByZero", "0 raised to a negative power");
    return rat_pow(Rat(base.get_den(), base.get_num()), -e);
}

// C(n, k) for arbitrary integer n and k >= 0, by the falling-factorial formula.
inline Int int_binom(const Int& n, unsigned long k) {
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

} // namespace binocobar
