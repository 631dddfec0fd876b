#pragma once
#include <map>
#include <optional>

#include "binocobar/laurent.hpp"

namespace binocobar {

/* Integer-valued polynomial written in the binomial basis a_n = C(t, n).
 * The coefficient map is sparse; zero coefficients are never stored.
 *
 * These polynomials form a ring: products expand through the multinomial
 * structure constants (alpha_mul below), so no rational arithmetic is
 * needed until a monomial-basis view is requested. */
class NumPoly {
public:
    NumPoly() = default;
    static NumPoly alpha(int n); // basis element C(t, n), n >= 0
    static NumPoly constant(const Int& c);

    const std::map<int, Int>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    Int coeff(int n) const;
    int max_index() const; // 0 for the zero polynomial

    NumPoly operator+(const NumPoly& o) const;
    NumPoly operator-(const NumPoly& o) const;
    NumPoly operator-() const;
    NumPoly scaled(const Int& c) const;
    bool operator==(const NumPoly& o) const { return c_ == o.c_; }

    void add(int n, const Int& c);

private:
    std::map<int, Int> c_;
};

// k! / (a! b! c!) with a+b+c = k; zero if any part is negative.
Int multinomial(int k, int a, int b, int c);

// Product in the binomial basis via the structure constants
//   a_i * a_j = sum_k multinomial(k; k-i, k-j, i+j-k) a_k.
NumPoly alpha_mul(const NumPoly& a, const NumPoly& b);

// Change of basis: binomial coefficients to powers of t and back.
// from_monomial runs forward finite differences at 0,1,2,... and demands
// every difference be an integer.
LaurentPoly to_monomial(const NumPoly& a);
NumPoly from_monomial(const LaurentPoly& p); // NegativeExponent, NotNumerical
std::optional<NumPoly> try_from_monomial(const LaurentPoly& p);
bool is_numerical(const LaurentPoly& p);

// Multiplication by t: t a_n = n a_n + (n+1) a_{n+1}.
NumPoly t_apply(const NumPoly& a);
NumPoly t_apply_pow(const NumPoly& a, int k);

// Exact division by t when the quotient stays integer-valued.
std::optional<NumPoly> div_t(const NumPoly& a);

// lambda^n(a) = C(a, n), computed in the monomial basis and re-expanded.
NumPoly lambda_op(const NumPoly& a, int n);

// Value at an integer point (exact; negative points go through the
// monomial basis, where the value is still an integer).
Int eval_at(const NumPoly& a, const Int& x);

} // namespace binocobar
