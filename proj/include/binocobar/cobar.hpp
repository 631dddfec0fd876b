#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "binocobar/hopf.hpp"
#include "binocobar/rng.hpp"

namespace binocobar {

/* The coefficient ring Z[u, 1/u], graded by the u-exponent. */
class RElem {
public:
    RElem() = default;
    static RElem constant(const Int& c);
    static RElem u_pow(int a); // u^a, any sign

    const std::map<int, Int>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    Int coeff(int a) const;

    RElem operator+(const RElem& o) const;
    RElem operator-(const RElem& o) const;
    RElem operator-() const;
    RElem operator*(const RElem& o) const;
    RElem scaled(const Int& c) const;
    bool operator==(const RElem& o) const { return c_ == o.c_; }

    void add(int a, const Int& c);
    std::string str() const;

private:
    std::map<int, Int> c_;
};

/* Element of the cosimplicial level C^n = R (x) H^(x n), stored per
 * u-exponent with a canonical tensor for each. Degree 0 holds scalars
 * (arity-0 tensors), so it is R itself. */
class CobarElem {
public:
    explicit CobarElem(int degree = 0);
    static CobarElem from_r(const RElem& r); // degree 0
    static CobarElem monomial(int uexp, const TensorH& t);

    int degree() const { return degree_; }
    const std::map<int, TensorH>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    CobarElem operator+(const CobarElem& o) const;
    CobarElem operator-(const CobarElem& o) const;
    CobarElem operator-() const;
    CobarElem operator*(const CobarElem& o) const; // u-exponents add, factors multiply
    CobarElem scaled(const Int& c) const;
    bool operator==(const CobarElem& o) const {
        return degree_ == o.degree_ && t_ == o.t_;
    }

    void add_term(int uexp, const TensorH& t);
    RElem as_r() const; // degree 0
    std::string str() const;

private:
    int degree_;
    std::map<int, TensorH> t_;
};

// Left and right units of the algebroid, landing in degree 1.
CobarElem eta_L(const RElem& r); // u^a -> u^a (x) 1
CobarElem eta_R(const RElem& r); // u^a -> u^a (x) t^a

// Counit and conjugation of the degree-1 level.
RElem gamma_counit(const CobarElem& x);
CobarElem gamma_conjugation(const CobarElem& x);

/* Cofaces on degree n: index 0 inserts t^a in front (the right unit acting
 * through the twisted tensor placement), indices 1..n apply the coproduct
 * to that factor, index n+1 appends the unit. */
CobarElem coface(int i, const CobarElem& x);        // FaceIndexOutOfRange
CobarElem codegeneracy(int i, const CobarElem& x);  // DegeneracyIndexOutOfRange

CobarElem cobar_differential(const CobarElem& x); // sum of (-1)^i cofaces

struct GradingDegree {
    enum Kind { Zero, Pure, Mixed } kind = Zero;
    int value = 0; // meaningful only for Pure
    bool operator==(const GradingDegree& o) const {
        return kind == o.kind && (kind != Pure || value == o.value);
    }
};
GradingDegree grading_degree(const CobarElem& x);

// Basis of { r : eta_L(r) = eta_R(r) } over u-exponents in [-bound, bound].
std::vector<RElem> h0_primitives(int udeg_bound);

/* The plain cosimplicial ring built on F alone: degree n holds an element
 * of the (n+1)-fold tensor power of F over the binomial basis. */
class FCosimplexElem {
public:
    explicit FCosimplexElem(int degree = 0);
    static FCosimplexElem monomial(const std::vector<int>& alphas, const Int& c);

    int degree() const { return degree_; }
    const std::map<std::vector<int>, Int>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    FCosimplexElem operator+(const FCosimplexElem& o) const;
    FCosimplexElem operator-(const FCosimplexElem& o) const;
    FCosimplexElem scaled(const Int& c) const;
    bool operator==(const FCosimplexElem& o) const {
        return degree_ == o.degree_ && c_ == o.c_;
    }

    void add(const std::vector<int>& key, const Int& c);

private:
    int degree_;
    std::map<std::vector<int>, Int> c_;
};

FCosimplexElem f_coface(int i, const FCosimplexElem& x);       // FaceIndexOutOfRange
FCosimplexElem f_codegeneracy(int i, const FCosimplexElem& x); // DegeneracyIndexOutOfRange

// Seeded random elements for the property suites.
CobarElem random_cobar(Rng& rng, int degree, int max_terms, int max_uexp,
                       int max_alpha, int max_shift);

CheckReport algebroid_axioms_verify(const std::vector<RElem>& rs,
                                    const std::vector<CobarElem>& gammas);
CheckReport cosimplicial_identities_verify(int maxdeg, int trials, std::uint64_t seed);

} // namespace binocobar
