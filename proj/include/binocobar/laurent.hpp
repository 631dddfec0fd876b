#pragma once
#include <map>

#include "binocobar/scalar.hpp"

namespace binocobar {

/* Laurent polynomial in one variable t over Q, sparse in the exponent.
 * Zero coefficients are never stored. */
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly constant(const Rat& c);
    static LaurentPoly monomial(int exp, const Rat& c);
    static LaurentPoly t(); // the variable itself

    const std::map<int, Rat>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    Rat coeff(int exp) const;
    int lowest_exp() const;  // 0 for the zero polynomial
    int highest_exp() const; // 0 for the zero polynomial

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly scaled(const Rat& c) const;
    LaurentPoly shifted(int k) const; // multiply by t^k
    bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }

    void set(int exp, const Rat& c); // overwrite one coefficient
    void add(int exp, const Rat& c); // accumulate one coefficient

    Rat eval(const Rat& x) const; // DivisionByZero at x = 0 with negative exponents

private:
    std::map<int, Rat> c_;
};

LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly laurent_invert_t(const LaurentPoly& a); // t -> 1/t
Rat laurent_eval(const LaurentPoly& a, const Rat& x);

} // namespace binocobar
