#include "binocobar/laurent.hpp"

namespace binocobar {

LaurentPoly LaurentPoly::constant(const Rat& c) {
    LaurentPoly p;
    p.add(0, c);
    return p;
}

LaurentPoly LaurentPoly::monomial(int exp, const Rat& c) {
    LaurentPoly p;
    p.add(exp, c);
    return p;
}

LaurentPoly LaurentPoly::t() { return monomial(1, Rat(1)); }

Rat LaurentPoly::coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? Rat(0) : it->second;
}

int LaurentPoly::lowest_exp() const { return c_.empty() ? 0 : c_.begin()->first; }
int LaurentPoly::highest_exp() const { return c_.empty() ? 0 : c_.rbegin()->first; }

void LaurentPoly::set(int exp, const Rat& c) {
    if (c == 0)
        c_.erase(exp);
    else
        c_[exp] = c;
}

void LaurentPoly::add(int exp, const Rat& c) {
    auto it = c_.emplace(exp, Rat(0)).first;
    it->second += c;
    if (it->second == 0) c_.erase(it);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto& [e, c] : o.c_) r.add(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto& [e, c] : o.c_) r.add(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (auto& [e, c] : c_) r.c_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (auto& [e1, c1] : c_)
        for (auto& [e2, c2] : o.c_) r.add(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rat& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (auto& [e, v] : c_) r.c_[e] = v * c;
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r;
    for (auto& [e, v] : c_) r.c_[e + k] = v;
    return r;
}

Rat LaurentPoly::eval(const Rat& x) const {
    if (x == 0 && !c_.empty() && lowest_exp() < 0)
        throw error("DivisionByZero", "Laurent polynomial has a pole at 0");
    Rat acc(0);
    for (auto& [e, c] : c_) acc += c * rat_pow(x, e);
    return acc;
}

LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly laurent_invert_t(const LaurentPoly& a) {
    LaurentPoly r;
    for (auto& [e, c] : a.terms()) r.set(-e, c);
    return r;
}

Rat laurent_eval(const LaurentPoly& a, const Rat& x) { return a.eval(x); }

} // namespace binocobar
