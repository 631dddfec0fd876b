#pragma once
#include <optional>
#include <vector>

#include "binocobar/report.hpp"
#include "binocobar/scalar.hpp"

namespace binocobar {

/* Residue carrying its modulus. Mixing moduli is a programming error, not
 * a data error, so it throws logic_error rather than a tagged failure. */
class ModInt {
public:
    ModInt() = default; // zero with unset modulus; assign before use
    ModInt(const Int& v, const Int& q);

    const Int& value() const { return v_; }
    const Int& modulus() const { return q_; }
    bool is_zero() const { return v_ == 0; }

    ModInt operator+(const ModInt& o) const;
    ModInt operator-(const ModInt& o) const;
    ModInt operator*(const ModInt& o) const;
    ModInt operator-() const;
    bool operator==(const ModInt& o) const { return v_ == o.v_ && q_ == o.q_; }

private:
    void check(const ModInt& o) const;
    Int v_ = 0, q_ = 0;
};

namespace zq {

/* Column-major linear algebra over Z/ell^nu. The Howell form is the
 * canonical generating set of a column span: two spans are equal exactly
 * when their Howell forms agree, including over zero divisors. */
using Col = std::vector<ModInt>;
using Cols = std::vector<Col>;

int val_of(const Int& v, const Int& ell, int nu); // nu for v = 0

Col zero_col(int d, const Int& q);
Cols identity(int d, const Int& q);
Col matvec(const Cols& a, const Col& x);
Cols matmul(const Cols& a, const Cols& b);

Cols howell(Cols cols, const Int& ell, int nu);
bool span_equal(const Cols& a, const Cols& b, const Int& ell, int nu);
bool in_span(Col v, const Cols& howell_cols, const Int& ell, int nu);
Int span_size(const Cols& howell_cols, const Int& ell, int nu);

// canonical generators of { x : A x = 0 }
Cols kernel(const Cols& a, const Int& ell, int nu);

// free basis via unit pivots; fails (nullopt) when the span is not free
struct UnitBasis {
    Cols basis;
    std::vector<int> pivot_rows;
};
std::optional<UnitBasis> unit_basis(Cols cols, const Int& ell, int nu);

std::optional<Cols> inverse(const Cols& a, const Int& ell, int nu);

} // namespace zq

/* Endomorphism of a free module over Z/ell^nu; columns are the images of
 * the basis vectors. */
struct EndoMap {
    Int ell;
    int nu = 1;
    Int q;
    int dim = 0;
    zq::Cols cols;
};

// One basic block of the multiplication-by-(k ell + t) operator on the
// span of a_0 ... a_{ell-1} mod ell^nu.
EndoMap block_endo(const Int& ell, int nu, int k); // InvalidPrime

// Multiplication by t on the span of a_0 ... a_{q-1} mod q = ell^nu; the
// overflow coefficient q vanishes, so the block is closed.
EndoMap t_block_endo(const Int& ell, int nu); // InvalidPrime, SizeGuard

/* Localization of a finite module at an endomorphism: the stable image
 * im(phi^N) together with the induced (invertible) action. */
struct LocalizedModule {
    Int ell;
    int nu = 1;
    Int q;
    int ambient_dim = 0;
    zq::Cols basis;        // free basis of the stable image
    std::vector<int> pivot_rows;
    zq::Cols action;       // matrix of phi restricted to the stable image
};

LocalizedModule eventual_localization(const EndoMap& m); // NotStabilized

// The stable image of multiplication by t on the basic block is spanned by
// the classes a_i with 0 < i < q and ell not dividing i.
CheckReport hq_basis_check(const Int& ell, int nu); // InvalidPrime, SizeGuard

// Determinant of the operator block away from a_0 is the unit
// prod_{i=1}^{ell-1} (k ell + i), and the nu-th iterate pushes a_0 into
// the span of a_1 ... a_{ell-1}.
CheckReport lemma_Mb_check(const Int& ell, int nu, int k); // InvalidPrime

bool is_prime(const Int& p);

} // namespace binocobar
