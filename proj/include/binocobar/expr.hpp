#pragma once
#include <memory>
#include <string>
#include <variant>

#include "binocobar/fgl.hpp"

namespace binocobar {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/* Abstract syntax over the atoms t, u, a(n), b(n) and integer literals.
 * Pow keeps its exponent inline because only literal exponents are
 * grammatical; Neg exists so formatting round-trips a leading minus. */
struct Expr {
    enum class Kind { Literal, T, U, Alpha, Beta, Neg, Add, Sub, Mul, Pow, Tensor };
    Kind kind = Kind::Literal;
    Int value = 0; // Literal value, Alpha/Beta index, Pow exponent
    ExprPtr lhs, rhs;

    bool operator==(const Expr& o) const;
};

ExprPtr parse_expr(const std::string& src); // parse_error carries byte offsets
std::string format_expr(const ExprPtr& e);  // reparses to an equal tree

/* Evaluation target. F is the binomial-basis ring, H its localization,
 * cobar(n) the degree-n cosimplicial level, beta the R-span of the beta
 * basis (with beta_0 as unit, so bare scalars and u live there too). */
struct EvalCtx {
    enum class Kind { F, H, Cobar, Beta };
    Kind kind = Kind::F;
    int degree = 0; // Cobar only

    static EvalCtx f() { return {Kind::F, 0}; }
    static EvalCtx h() { return {Kind::H, 0}; }
    static EvalCtx cobar(int n) { return {Kind::Cobar, n}; }
    static EvalCtx beta() { return {Kind::Beta, 0}; }
    std::string str() const;
};

using Value = std::variant<NumPoly, HElem, CobarElem, BetaVec>;

// ContextViolation for atoms or operations the context lacks,
// NegativeExponent for inverses of anything but t and u.
Value eval_expr(const ExprPtr& e, const EvalCtx& ctx);

} // namespace binocobar
