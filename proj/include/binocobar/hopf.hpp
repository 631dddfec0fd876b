#pragma once
#include <vector>

#include "binocobar/numpoly.hpp"
#include "binocobar/report.hpp"

namespace binocobar {

/* Element of H, the localization of the integer-valued polynomials
 * inverting t. Stored as t^{-shift} * num with the shift minimal: num is
 * only divisible by t (inside the integer-valued ring) when shift = 0.
 * Construction normalizes, so equal elements compare equal memberwise. */
class HElem {
public:
    HElem() = default; // zero
    HElem(int shift, NumPoly num);
    static HElem one() { return HElem(0, NumPoly::constant(1)); }
    static HElem t_inv(int j) { return HElem(j, NumPoly::constant(1)); }

    int shift() const { return shift_; }
    const NumPoly& num() const { return num_; }
    bool is_zero() const { return num_.is_zero(); }

    HElem operator+(const HElem& o) const;
    HElem operator-(const HElem& o) const;
    HElem operator-() const;
    HElem operator*(const HElem& o) const;
    HElem scaled(const Int& c) const;
    bool operator==(const HElem& o) const { return shift_ == o.shift_ && num_ == o.num_; }

private:
    int shift_ = 0;
    NumPoly num_;
};

HElem h_normalize(int shift, const NumPoly& num);
HElem h_mul(const HElem& a, const HElem& b);
bool h_eq(const HElem& a, const HElem& b);

LaurentPoly to_laurent(const HElem& a);
Rat h_eval(const HElem& a, const Rat& x);

/* Decides membership in H constructively: clear negative powers of t and
 * one extra t-power per prime-power order in the denominators, then test
 * integer-valuedness. NotInH when the test fails. */
HElem h_from_laurent(const LaurentPoly& p);

// The valuation criterion: p(a) lies in Z[1/a] for every 1 <= a <= bound.
bool evaluation_criterion(const LaurentPoly& p, int bound);

Int counit(const HElem& a);     // evaluation at t = 1
HElem antipode(const HElem& a); // t -> 1/t

/* Element of the arity-fold tensor power of H. One shift per tensor
 * factor, each minimal jointly over that factor's coefficients; the
 * residual numerator lives in the tensor power of the integer-valued
 * ring and is stored sparsely over multi-indices. */
class TensorH {
public:
    explicit TensorH(int arity);
    static TensorH scalar(const Int& c);          // arity 0
    static TensorH from_helem(const HElem& a);    // arity 1
    static TensorH unit(int arity);               // 1 x ... x 1

    int arity() const { return arity_; }
    const std::vector<int>& shifts() const { return shifts_; }
    const std::map<std::vector<int>, Int>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    TensorH operator+(const TensorH& o) const;
    TensorH operator-(const TensorH& o) const;
    TensorH operator-() const;
    TensorH scaled(const Int& c) const;
    TensorH mul(const TensorH& o) const; // factorwise product
    bool operator==(const TensorH& o) const {
        return arity_ == o.arity_ && shifts_ == o.shifts_ && c_ == o.c_;
    }

    // Accumulate coeff * (t^{-f.first} f.second) x ... ; factors.size() == arity.
    void add_term(const Int& coeff, const std::vector<std::pair<int, NumPoly>>& factors);
    void normalize();

    HElem as_helem() const; // arity 1
    Int as_scalar() const;  // arity 0
    HElem fold_mul() const; // multiply all factors out in H

private:
    void raise_shift(int i, int delta);
    int arity_ = 0;
    std::vector<int> shifts_;
    std::map<std::vector<int>, Int> c_;
};

// Coproduct determined by t -> t x t; on basis elements it expands
// C(t1 t2, n) over C(t1, a) C(t2, b) by double finite differences at 0.
TensorH coproduct(const HElem& a);

enum class SlotOp { Coproduct, Counit, Antipode };

// Apply a structure map to one tensor factor (slots are 1-based).
TensorH tensor_slot_apply(const TensorH& x, int slot, SlotOp op); // SlotOutOfRange

// Exact value of a tensor at a point (x_1, ..., x_n); test support.
Rat tensor_eval(const TensorH& x, const std::vector<Rat>& xs);

// Coassociativity, counit, antipode and multiplicativity checks over the
// given sample elements (multiplicativity pairs consecutive samples).
CheckReport hopf_axioms_verify(const std::vector<HElem>& samples);

} // namespace binocobar
