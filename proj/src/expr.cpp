#include "binocobar/expr.hpp"

#include <cctype>

namespace binocobar {

bool Expr::operator==(const Expr& o) const {
    if (kind != o.kind || value != o.value) return false;
    auto same = [](const ExprPtr& a, const ExprPtr& b) {
        if (!a || !b) return !a && !b;
        return *a == *b;
    };
    return same(lhs, o.lhs) && same(rhs, o.rhs);
}

namespace {

ExprPtr node(Expr::Kind k, Int v = 0, ExprPtr l = nullptr, ExprPtr r = nullptr) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->value = std::move(v);
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
}

struct Token {
    enum class Type { Integer, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };
    Type type = Type::End;
    std::size_t pos = 0;
    Int value = 0;      // Integer
    std::string name;   // Ident
};

class Parser {
public:
    explicit Parser(const std::string& src) : src_(src) { advance(); }

    ExprPtr parse() {
        ExprPtr e = tensor();
        expect(Token::Type::End, "end of input");
        return e;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        tok_ = Token{};
        tok_.pos = pos_;
        if (pos_ >= src_.size()) return;
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            tok_.type = Token::Type::Integer;
            tok_.value = Int(src_.substr(start, pos_ - start));
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            tok_.type = Token::Type::Ident;
            tok_.name = src_.substr(start, pos_ - start);
            return;
        }
        ++pos_;
        switch (c) {
            case '+': tok_.type = Token::Type::Plus; return;
            case '-': tok_.type = Token::Type::Minus; return;
            case '*': tok_.type = Token::Type::Star; return;
            case '^': tok_.type = Token::Type::Caret; return;
            case '(': tok_.type = Token::Type::LParen; return;
            case ')': tok_.type = Token::Type::RParen; return;
            default: throw parse_error(tok_.pos, "a token");
        }
    }

    void expect(Token::Type t, const std::string& what) {
        if (tok_.type != t) throw parse_error(tok_.pos, what);
        if (t != Token::Type::End) advance();
    }

    bool eat(Token::Type t) {
        if (tok_.type != t) return false;
        advance();
        return true;
    }

    ExprPtr tensor() {
        ExprPtr l = sum();
        while (tok_.type == Token::Type::Ident && tok_.name == "ox") {
            advance();
            l = node(Expr::Kind::Tensor, 0, l, sum());
        }
        return l;
    }

    ExprPtr sum() {
        ExprPtr l;
        if (eat(Token::Type::Minus))
            l = node(Expr::Kind::Neg, 0, product());
        else
            l = product();
        for (;;) {
            if (eat(Token::Type::Plus))
                l = node(Expr::Kind::Add, 0, l, product());
            else if (eat(Token::Type::Minus))
                l = node(Expr::Kind::Sub, 0, l, product());
            else
                return l;
        }
    }

    ExprPtr product() {
        ExprPtr l = power();
        while (eat(Token::Type::Star)) l = node(Expr::Kind::Mul, 0, l, power());
        return l;
    }

    ExprPtr power() {
        ExprPtr b = atom();
        while (eat(Token::Type::Caret)) {
            bool neg = eat(Token::Type::Minus);
            if (tok_.type != Token::Type::Integer)
                throw parse_error(tok_.pos, "integer exponent");
            Int e = tok_.value;
            advance();
            b = node(Expr::Kind::Pow, neg ? Int(-e) : e, b);
        }
        return b;
    }

    ExprPtr indexed(Expr::Kind k) {
        advance();
        expect(Token::Type::LParen, "'('");
        if (tok_.type != Token::Type::Integer) throw parse_error(tok_.pos, "integer");
        Int n = tok_.value;
        advance();
        expect(Token::Type::RParen, "')'");
        return node(k, n);
    }

    ExprPtr atom() {
        switch (tok_.type) {
            case Token::Type::Integer: {
                Int v = tok_.value;
                advance();
                return node(Expr::Kind::Literal, v);
            }
            case Token::Type::Ident:
                if (tok_.name == "t") {
                    advance();
                    return node(Expr::Kind::T);
                }
                if (tok_.name == "u") {
                    advance();
                    return node(Expr::Kind::U);
                }
                if (tok_.name == "a") return indexed(Expr::Kind::Alpha);
                if (tok_.name == "b") return indexed(Expr::Kind::Beta);
                throw parse_error(tok_.pos, "an atom");
            case Token::Type::LParen: {
                advance();
                ExprPtr e = tensor();
                expect(Token::Type::RParen, "')'");
                return e;
            }
            default:
                throw parse_error(tok_.pos, "an atom");
        }
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    Token tok_;
};

// Precedence levels for printing: tensor 0, sums 1, products 2, powers 3,
// atoms 4. A child below the required level gets parentheses.
int level_of(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Tensor: return 0;
        case Expr::Kind::Add:
        case Expr::Kind::Sub:
        case Expr::Kind::Neg: return 1;
        case Expr::Kind::Mul: return 2;
        case Expr::Kind::Pow: return 3;
        case Expr::Kind::Literal: return e.value < 0 ? 1 : 4;
        default: return 4;
    }
}

std::string fmt(const ExprPtr& e, int min_level);

std::string fmt_raw(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Literal: return e.value.get_str();
        case Expr::Kind::T: return "t";
        case Expr::Kind::U: return "u";
        case Expr::Kind::Alpha: return "a(" + e.value.get_str() + ")";
        case Expr::Kind::Beta: return "b(" + e.value.get_str() + ")";
        case Expr::Kind::Neg: return "-" + fmt(e.lhs, 2);
        case Expr::Kind::Add: return fmt(e.lhs, 1) + " + " + fmt(e.rhs, 2);
        case Expr::Kind::Sub: return fmt(e.lhs, 1) + " - " + fmt(e.rhs, 2);
        case Expr::Kind::Mul: return fmt(e.lhs, 2) + " * " + fmt(e.rhs, 3);
        case Expr::Kind::Pow: return fmt(e.lhs, 3) + "^" + e.value.get_str();
        case Expr::Kind::Tensor: return fmt(e.lhs, 0) + " ox " + fmt(e.rhs, 1);
    }
    return "";
}

std::string fmt(const ExprPtr& e, int min_level) {
    std::string s = fmt_raw(*e);
    return level_of(*e) < min_level ? "(" + s + ")" : s;
}

int small_index(const Int& v, const char* what) {
    if (!v.fits_sint_p() || v > 1000000 || v < -1000000)
        throw error("SizeGuard", std::string(what) + " out of range: " + v.get_str());
    return static_cast<int>(v.get_si());
}

HElem t_power(int e) {
    if (e >= 0) return HElem(0, t_apply_pow(NumPoly::constant(1), e));
    return HElem::t_inv(-e);
}

CobarElem cb_scale(const RElem& r, const CobarElem& x) {
    CobarElem out(x.degree());
    for (auto& [re, rc] : r.terms())
        for (auto& [ue, ten] : x.terms()) out.add_term(ue + re, ten.scaled(rc));
    return out;
}

CobarElem cb_mul(const CobarElem& a, const CobarElem& b) {
    if (a.degree() == b.degree()) return a * b;
    if (a.degree() == 0) return cb_scale(a.as_r(), b);
    if (b.degree() == 0) return cb_scale(b.as_r(), a);
    throw error("ContextViolation", "product of cosimplicial degrees " +
                                        std::to_string(a.degree()) + " and " +
                                        std::to_string(b.degree()));
}

CobarElem cb_tensor(const CobarElem& a, const CobarElem& b) {
    CobarElem out(a.degree() + b.degree());
    for (auto& [ea, ta] : a.terms())
        for (auto& [eb, tb] : b.terms()) {
            TensorH joined(ta.arity() + tb.arity());
            for (auto& [ka, va] : ta.coeffs())
                for (auto& [kb, vb] : tb.coeffs()) {
                    std::vector<std::pair<int, NumPoly>> factors;
                    factors.reserve(joined.arity());
                    for (int i = 0; i < ta.arity(); ++i)
                        factors.emplace_back(ta.shifts()[i], NumPoly::alpha(ka[i]));
                    for (int i = 0; i < tb.arity(); ++i)
                        factors.emplace_back(tb.shifts()[i], NumPoly::alpha(kb[i]));
                    joined.add_term(va * vb, factors);
                }
            joined.normalize();
            out.add_term(ea + eb, joined);
        }
    return out;
}

BetaVec beta_scalar(const RElem& r) {
    BetaVec v;
    v.add(0, r);
    return v;
}

class Evaluator {
public:
    explicit Evaluator(const EvalCtx& ctx) : ctx_(ctx) {}

    Value eval(const Expr& e) {
        switch (e.kind) {
            case Expr::Kind::Literal: return literal(e.value);
            case Expr::Kind::T: return atom_t();
            case Expr::Kind::U: return atom_u(1);
            case Expr::Kind::Alpha: return atom_alpha(small_index(e.value, "basis index"));
            case Expr::Kind::Beta: return atom_beta(small_index(e.value, "basis index"));
            case Expr::Kind::Neg: return neg(eval(*e.lhs));
            case Expr::Kind::Add: return add(eval(*e.lhs), eval(*e.rhs));
            case Expr::Kind::Sub: return add(eval(*e.lhs), neg(eval(*e.rhs)));
            case Expr::Kind::Mul: return mul(eval(*e.lhs), eval(*e.rhs));
            case Expr::Kind::Pow: return pow(e);
            case Expr::Kind::Tensor: return tensor(e);
        }
        throw error("ParseError", "malformed syntax tree");
    }

private:
    bool in(EvalCtx::Kind k) const { return ctx_.kind == k; }

    Value literal(const Int& c) {
        if (in(EvalCtx::Kind::F)) return NumPoly::constant(c);
        if (in(EvalCtx::Kind::H)) return HElem(0, NumPoly::constant(c));
        if (in(EvalCtx::Kind::Cobar)) return CobarElem::from_r(RElem::constant(c));
        return beta_scalar(RElem::constant(c));
    }

    Value atom_t() {
        if (in(EvalCtx::Kind::F)) return NumPoly::alpha(1);
        if (in(EvalCtx::Kind::H)) return HElem(0, NumPoly::alpha(1));
        if (in(EvalCtx::Kind::Cobar))
            return CobarElem::monomial(0, TensorH::from_helem(HElem(0, NumPoly::alpha(1))));
        throw context_violation("t", ctx_.str());
    }

    Value atom_u(int e) {
        if (in(EvalCtx::Kind::Cobar)) return CobarElem::from_r(RElem::u_pow(e));
        if (in(EvalCtx::Kind::Beta)) return beta_scalar(RElem::u_pow(e));
        throw context_violation("u", ctx_.str());
    }

    Value atom_alpha(int n) {
        if (n < 0) throw error("SizeGuard", "negative basis index");
        if (in(EvalCtx::Kind::F)) return NumPoly::alpha(n);
        if (in(EvalCtx::Kind::H)) return HElem(0, NumPoly::alpha(n));
        if (in(EvalCtx::Kind::Cobar))
            return CobarElem::monomial(0, TensorH::from_helem(HElem(0, NumPoly::alpha(n))));
        throw context_violation("a(" + std::to_string(n) + ")", ctx_.str());
    }

    Value atom_beta(int n) {
        if (n < 0) throw error("SizeGuard", "negative basis index");
        if (in(EvalCtx::Kind::Beta)) return BetaVec::beta(n);
        throw context_violation("b(" + std::to_string(n) + ")", ctx_.str());
    }

    Value neg(Value v) {
        return std::visit([](auto& x) -> Value { return -x; }, v);
    }

    Value add(Value a, Value b) {
        if (in(EvalCtx::Kind::Cobar)) {
            auto& x = std::get<CobarElem>(a);
            auto& y = std::get<CobarElem>(b);
            if (x.degree() != y.degree()) {
                if (x.is_zero()) return y;
                if (y.is_zero()) return x;
                throw error("ContextViolation", "sum of cosimplicial degrees " +
                                                    std::to_string(x.degree()) + " and " +
                                                    std::to_string(y.degree()));
            }
            return x + y;
        }
        if (a.index() != b.index()) throw error("ContextViolation", "mixed operands");
        return std::visit(
            [&](auto& x) -> Value { return x + std::get<std::decay_t<decltype(x)>>(b); }, a);
    }

    Value mul(Value a, Value b) {
        if (in(EvalCtx::Kind::Cobar))
            return cb_mul(std::get<CobarElem>(a), std::get<CobarElem>(b));
        if (in(EvalCtx::Kind::F)) return alpha_mul(std::get<NumPoly>(a), std::get<NumPoly>(b));
        if (in(EvalCtx::Kind::H)) return std::get<HElem>(a) * std::get<HElem>(b);
        return std::get<BetaVec>(a) * std::get<BetaVec>(b);
    }

    Value one_of_degree(const Value& base) {
        if (in(EvalCtx::Kind::F)) return NumPoly::constant(1);
        if (in(EvalCtx::Kind::H)) return HElem::one();
        if (in(EvalCtx::Kind::Beta)) return beta_scalar(RElem::constant(1));
        int d = std::get<CobarElem>(base).degree();
        return d == 0 ? CobarElem::from_r(RElem::constant(1))
                      : CobarElem::monomial(0, TensorH::unit(d));
    }

    Value pow(const Expr& e) {
        int k = small_index(e.value, "exponent");
        if (k < 0) {
            // Only the grouplike atoms t and u are invertible.
            if (e.lhs->kind == Expr::Kind::U) return atom_u(k);
            if (e.lhs->kind == Expr::Kind::T) {
                if (in(EvalCtx::Kind::F)) throw context_violation("t^-1", ctx_.str());
                if (in(EvalCtx::Kind::H)) return t_power(k);
                if (in(EvalCtx::Kind::Cobar))
                    return CobarElem::monomial(0, TensorH::from_helem(t_power(k)));
                throw context_violation("t^-1", ctx_.str());
            }
            throw error("NegativeExponent", "negative power of a non-invertible element");
        }
        Value base = eval(*e.lhs);
        Value acc = one_of_degree(base);
        for (int i = 0; i < k; ++i) acc = mul(acc, base);
        return acc;
    }

    Value tensor(const Expr& e) {
        if (!in(EvalCtx::Kind::Cobar)) throw context_violation("ox", ctx_.str());
        return cb_tensor(std::get<CobarElem>(eval(*e.lhs)), std::get<CobarElem>(eval(*e.rhs)));
    }

    EvalCtx ctx_;
};

} // namespace

ExprPtr parse_expr(const std::string& src) { return Parser(src).parse(); }

std::string format_expr(const ExprPtr& e) { return fmt(e, 0); }

std::string EvalCtx::str() const {
    switch (kind) {
        case Kind::F: return "F";
        case Kind::H: return "H";
        case Kind::Cobar: return "cobar(" + std::to_string(degree) + ")";
        case Kind::Beta: return "beta";
    }
    return "";
}

Value eval_expr(const ExprPtr& e, const EvalCtx& ctx) {
    Value v = Evaluator(ctx).eval(*e);
    if (ctx.kind == EvalCtx::Kind::Cobar) {
        auto& c = std::get<CobarElem>(v);
        if (c.degree() != ctx.degree && !c.is_zero())
            throw error("ContextViolation", "expression has cosimplicial degree " +
                                                std::to_string(c.degree()) + ", context wants " +
                                                std::to_string(ctx.degree));
        if (c.degree() != ctx.degree) return CobarElem(ctx.degree);
    }
    return v;
}

} // namespace binocobar
