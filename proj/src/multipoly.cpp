#include "binocobar/multipoly.hpp"

namespace binocobar {

MultiPoly MultiPoly::constant(const Int& c) {
    MultiPoly p;
    p.add(Monomial{}, c);
    return p;
}

MultiPoly MultiPoly::sym(const std::string& name) {
    MultiPoly p;
    p.add(Monomial{{name, 1}}, 1);
    return p;
}

void MultiPoly::add(const Monomial& m, const Int& c) {
    auto it = c_.emplace(m, 0).first;
    it->second += c;
    if (it->second == 0) c_.erase(it);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (auto& [m, c] : o.c_) r.add(m, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (auto& [m, c] : o.c_) r.add(m, -c);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r;
    for (auto& [m, c] : c_) r.c_[m] = -c;
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r;
    for (auto& [m1, c1] : c_)
        for (auto& [m2, c2] : o.c_) {
            Monomial m = m1;
            for (auto& [s, e] : m2) m[s] += e;
            r.add(m, c1 * c2);
        }
    return r;
}

MultiPoly MultiPoly::scaled(const Int& c) const {
    MultiPoly r;
    if (c == 0) return r;
    for (auto& [m, v] : c_) r.c_[m] = v * c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (auto& [m, c] : o.c_) add(m, c);
    return *this;
}

std::string MultiPoly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (auto& [m, c] : c_) {
        std::string term;
        if (m.empty()) {
            term = c.get_str();
        } else {
            if (c != 1) term = c.get_str();
            for (auto& [s, e] : m) {
                if (!term.empty()) term += "*";
                term += s;
                if (e != 1) term += "^" + std::to_string(e);
            }
        }
        if (!out.empty()) out += (term[0] == '-') ? "" : "+";
        out += term;
    }
    return out;
}

} // namespace binocobar
