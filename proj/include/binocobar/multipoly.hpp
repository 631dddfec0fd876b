#pragma once
#include <map>
#include <string>

#include "binocobar/scalar.hpp"

namespace binocobar {

// symbol name -> exponent (> 0); the empty map is the unit monomial
using Monomial = std::map<std::string, int>;

/* Multivariate polynomial over Z with named symbols. Used for generic
 * formal-group-law coefficients, so it only needs ring operations. */
class MultiPoly {
public:
    MultiPoly() = default;
    static MultiPoly constant(const Int& c);
    static MultiPoly one() { return constant(1); }
    static MultiPoly sym(const std::string& name);

    const std::map<Monomial, Int>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(const Int& c) const;
    MultiPoly& operator+=(const MultiPoly& o);
    bool operator==(const MultiPoly& o) const { return c_ == o.c_; }

    void add(const Monomial& m, const Int& c);
    std::string str() const; // canonical rendering, e.g. "3*a(1,1)^2*a(2,2)"

private:
    std::map<Monomial, Int> c_;
};

} // namespace binocobar
