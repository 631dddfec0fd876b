#include "binocobar/fgl.hpp"

#include <algorithm>

namespace binocobar {

std::string fgl_symbol(int i, int j) {
    if (i > j) std::swap(i, j);
    return "a(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

FglLaw<RElem> mult_law(int D) {
    FglLaw<RElem> f(D, true, true);
    f.set_coeff(1, 1, RElem::u_pow(1));
    return f;
}

FglLaw<MultiPoly> generic_law(int D) {
    FglLaw<MultiPoly> f(D, false, true);
    for (int i = 1; i <= D; ++i)
        for (int j = i; i + j <= D; ++j)
            f.set_coeff(i, j, MultiPoly::sym(fgl_symbol(i, j)));
    return f;
}

/* For x + y + uxy the k-th power is a trinomial expansion: choosing x
 * from a factors, y from b and uxy from c gives x^{a+c} y^{b+c} u^c, so
 * the (i,j) coefficient needs c = i+j-k, a = k-i, b = k-j. */
RElem mult_coeff_closed_form(int k, int i, int j) {
    if (k < 0 || i < 0 || j < 0) return RElem();
    if (k < std::max(i, j) || k > i + j) return RElem();
    Int m = multinomial(k, k - i, k - j, i + j - k);
    return RElem::u_pow(i + j - k).scaled(m);
}

CheckReport adams_a1jk_check(int D) {
    if (D < 2 || D > 8) throw error("SizeGuard", "generic degree must be in [2,8]");
    auto f = generic_law(D);
    CheckReport rep;
    rep.suite = "adams-a1jk(D=" + std::to_string(D) + ")";
    for (int j = 0; j + 1 <= D; ++j)
        for (int k = 1; k <= j + 1; ++k) {
            MultiPoly lhs = power_coeff(f, k, 1, j);
            int m = 1 + j - k;
            MultiPoly rhs;
            if (m == 0)
                rhs = MultiPoly::constant(k);
            else if (m > 0)
                rhs = MultiPoly::sym(fgl_symbol(1, m)).scaled(k);
            rep.add("k=" + std::to_string(k) + ",j=" + std::to_string(j), lhs == rhs,
                    lhs == rhs ? "" : "got " + lhs.str() + ", want " + rhs.str());
        }
    return rep;
}

BetaVec BetaVec::beta(int n) {
    if (n < 0) throw error("SizeGuard", "negative basis index");
    BetaVec v;
    v.add(n, RElem::constant(1));
    return v;
}

void BetaVec::add(int n, const RElem& c) {
    if (n < 0) throw error("SizeGuard", "negative basis index");
    auto it = c_.emplace(n, RElem()).first;
    it->second = it->second + c;
    if (it->second.is_zero()) c_.erase(it);
}

BetaVec BetaVec::operator+(const BetaVec& o) const {
    BetaVec r = *this;
    for (auto& [n, c] : o.c_) r.add(n, c);
    return r;
}

BetaVec BetaVec::operator-(const BetaVec& o) const {
    BetaVec r = *this;
    for (auto& [n, c] : o.c_) r.add(n, -c);
    return r;
}

BetaVec BetaVec::operator-() const {
    BetaVec r;
    for (auto& [n, c] : c_) r.add(n, -c);
    return r;
}

/* beta_i beta_j = u^{i+j} alpha_i alpha_j, so the alpha structure
 * constants transport with a u-exponent correction u^{i+j-k}. */
BetaVec BetaVec::operator*(const BetaVec& o) const {
    BetaVec r;
    for (auto& [i, ci] : c_)
        for (auto& [j, cj] : o.c_) {
            NumPoly prod = alpha_mul(NumPoly::alpha(i), NumPoly::alpha(j));
            for (auto& [k, m] : prod.terms())
                r.add(k, (ci * cj * RElem::u_pow(i + j - k)).scaled(m));
        }
    return r;
}

BetaVec BetaVec::scaled(const RElem& c) const {
    BetaVec r;
    for (auto& [n, v] : c_) r.add(n, v * c);
    return r;
}

BetaVec b_operator(const BetaVec& x) {
    BetaVec r;
    for (auto& [n, c] : x.terms()) {
        if (n > 0) r.add(n, (c * RElem::u_pow(1)).scaled(n));
        r.add(n + 1, c.scaled(n + 1));
    }
    return r;
}

void RNumPoly::add(int n, const RElem& c) {
    if (n < 0) throw error("SizeGuard", "negative basis index");
    auto it = c_.emplace(n, RElem()).first;
    it->second = it->second + c;
    if (it->second.is_zero()) c_.erase(it);
}

std::pair<RElem, RNumPoly> beta_to_alpha(const BetaVec& x) {
    RNumPoly raw;
    for (auto& [n, c] : x.terms()) raw.add(n, c * RElem::u_pow(n));
    if (raw.is_zero()) return {RElem::constant(1), raw};
    bool first = true;
    int minexp = 0;
    Int g = 0;
    for (auto& [n, c] : raw.terms())
        for (auto& [e, v] : c.terms()) {
            if (first || e < minexp) minexp = e;
            first = false;
            g = gcd(g, v);
        }
    g = abs(g);
    RNumPoly reduced;
    for (auto& [n, c] : raw.terms()) {
        RElem q;
        for (auto& [e, v] : c.terms()) q.add(e - minexp, v / g);
        reduced.add(n, q);
    }
    return {RElem::u_pow(minexp).scaled(g), reduced};
}

BetaVec alpha_to_beta(const RElem& scale, const RNumPoly& p) {
    BetaVec r;
    for (auto& [n, c] : p.terms()) r.add(n, scale * c * RElem::u_pow(-n));
    return r;
}

CobarElem telescope_colimit_map(int stage, const BetaVec& x) {
    if (stage < 0) throw error("SizeGuard", "negative telescope stage");
    CobarElem r(1);
    for (auto& [n, c] : x.terms()) {
        TensorH slot = TensorH::from_helem(HElem(stage, NumPoly::alpha(n)));
        for (auto& [e, v] : c.terms()) r.add_term(e + n - stage, slot.scaled(v));
    }
    return r;
}

std::pair<int, BetaVec> telescope_preimage(const HElem& h) {
    int stage = h.shift();
    BetaVec v;
    for (auto& [n, d] : h.num().terms()) v.add(n, RElem::u_pow(stage - n).scaled(d));
    return {stage, v};
}

} // namespace binocobar
