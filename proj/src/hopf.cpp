#include "binocobar/hopf.hpp"

#include <algorithm>

namespace binocobar {

HElem::HElem(int shift, NumPoly num) : shift_(shift), num_(std::move(num)) {
    if (shift_ < 0) throw error("NegativeExponent", "shift must be nonnegative");
    if (num_.is_zero()) {
        shift_ = 0;
        return;
    }
    while (shift_ > 0) {
        auto q = div_t(num_);
        if (!q) break;
        num_ = *q;
        --shift_;
    }
}

HElem h_normalize(int shift, const NumPoly& num) { return HElem(shift, num); }

HElem HElem::operator+(const HElem& o) const {
    int j = std::max(shift_, o.shift_);
    return HElem(j, t_apply_pow(num_, j - shift_) + t_apply_pow(o.num_, j - o.shift_));
}

HElem HElem::operator-(const HElem& o) const { return *this + (-o); }

HElem HElem::operator-() const {
    HElem r;
    r.shift_ = shift_;
    r.num_ = -num_;
    return r;
}

HElem HElem::operator*(const HElem& o) const {
    return HElem(shift_ + o.shift_, alpha_mul(num_, o.num_));
}

HElem HElem::scaled(const Int& c) const { return HElem(shift_, num_.scaled(c)); }

HElem h_mul(const HElem& a, const HElem& b) { return a * b; }
bool h_eq(const HElem& a, const HElem& b) { return a == b; }

LaurentPoly to_laurent(const HElem& a) { return to_monomial(a.num()).shifted(-a.shift()); }

Rat h_eval(const HElem& a, const Rat& x) { return to_laurent(a).eval(x); }

namespace {

// largest exponent of any prime in den (den >= 1)
int max_prime_power_exp(Int den) {
    int best = 0;
    for (Int p = 2; p * p <= den; ++p) {
        int e = 0;
        while (den % p == 0) {
            den /= p;
            ++e;
        }
        best = std::max(best, e);
    }
    if (den > 1) best = std::max(best, 1);
    return best;
}

} // namespace

HElem h_from_laurent(const LaurentPoly& p) {
    if (p.is_zero()) return HElem();
    int m = std::max(0, -p.lowest_exp());
    int nu = 0;
    for (auto& [e, c] : p.terms()) {
        (void)e;
        if (c.get_den() > 1) nu = std::max(nu, max_prime_power_exp(c.get_den()));
    }
    auto f = try_from_monomial(p.shifted(m + nu));
    if (!f) throw error("NotInH", "Laurent polynomial is not t-power times integer-valued");
    return HElem(m + nu, *f);
}

bool evaluation_criterion(const LaurentPoly& p, int bound) {
    for (int a = 1; a <= bound; ++a) {
        Int den = p.eval(Rat(a)).get_den();
        for (Int g = int_gcd(den, a); g > 1; g = int_gcd(den, a)) den /= g;
        if (den != 1) return false;
    }
    return true;
}

Int counit(const HElem& a) {
    // t = 1 kills the shift; C(1, n) vanishes for n >= 2
    return a.num().coeff(0) + a.num().coeff(1);
}

HElem antipode(const HElem& a) { return h_from_laurent(laurent_invert_t(to_laurent(a))); }

/* ----- tensor powers ----- */

TensorH::TensorH(int arity) : arity_(arity), shifts_(arity, 0) {
    if (arity < 0) throw error("SlotOutOfRange", "tensor arity must be nonnegative");
}

TensorH TensorH::scalar(const Int& c) {
    TensorH r(0);
    if (c != 0) r.c_[{}] = c;
    return r;
}

TensorH TensorH::from_helem(const HElem& a) {
    TensorH r(1);
    r.add_term(1, {{a.shift(), a.num()}});
    return r;
}

TensorH TensorH::unit(int arity) {
    TensorH r(arity);
    r.c_[std::vector<int>(arity, 0)] = 1;
    return r;
}

void TensorH::raise_shift(int i, int delta) {
    if (delta <= 0) return;
    std::map<std::vector<int>, Int> next;
    for (auto& [key, c] : c_) {
        NumPoly g = t_apply_pow(NumPoly::alpha(key[i]), delta);
        for (auto& [n, gc] : g.terms()) {
            std::vector<int> k2 = key;
            k2[i] = n;
            auto it = next.emplace(std::move(k2), 0).first;
            it->second += c * gc;
            if (it->second == 0) next.erase(it);
        }
    }
    c_ = std::move(next);
    shifts_[i] += delta;
}

void TensorH::add_term(const Int& coeff, const std::vector<std::pair<int, NumPoly>>& factors) {
    if ((int)factors.size() != arity_)
        throw error("SlotOutOfRange", "factor count does not match tensor arity");
    if (coeff == 0) return;
    std::vector<NumPoly> polys(arity_);
    for (int i = 0; i < arity_; ++i) {
        int target = std::max(shifts_[i], factors[i].first);
        raise_shift(i, target - shifts_[i]);
        polys[i] = t_apply_pow(factors[i].second, target - factors[i].first);
        if (polys[i].is_zero()) return;
    }
    // distribute the product of the factor polynomials over multi-indices
    std::vector<int> key(arity_);
    auto rec = [&](auto&& self, int i, const Int& c) -> void {
        if (i == arity_) {
            auto it = c_.emplace(key, 0).first;
            it->second += c;
            if (it->second == 0) c_.erase(it);
            return;
        }
        for (auto& [n, cn] : polys[i].terms()) {
            key[i] = n;
            self(self, i + 1, c * cn);
        }
    };
    rec(rec, 0, coeff);
}

void TensorH::normalize() {
    if (c_.empty()) {
        shifts_.assign(arity_, 0);
        return;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < arity_; ++i) {
            if (shifts_[i] == 0) continue;
            // slice the table along factor i and try to divide every slice by t
            std::map<std::vector<int>, NumPoly> slices;
            for (auto& [key, c] : c_) {
                std::vector<int> rest = key;
                rest.erase(rest.begin() + i);
                slices[rest].add(key[i], c);
            }
            std::map<std::vector<int>, NumPoly> divided;
            bool ok = true;
            for (auto& [rest, f] : slices) {
                auto q = div_t(f);
                if (!q) {
                    ok = false;
                    break;
                }
                divided[rest] = *q;
            }
            if (!ok) continue;
            c_.clear();
            for (auto& [rest, g] : divided)
                for (auto& [n, gc] : g.terms()) {
                    std::vector<int> key = rest;
                    key.insert(key.begin() + i, n);
                    c_[key] = gc;
                }
            --shifts_[i];
            changed = true;
            if (c_.empty()) { // dividing cannot kill terms, but stay safe
                shifts_.assign(arity_, 0);
                return;
            }
        }
    }
}

TensorH TensorH::operator+(const TensorH& o) const {
    if (arity_ != o.arity_) throw error("SlotOutOfRange", "tensor arities differ");
    TensorH r = *this;
    for (int i = 0; i < arity_; ++i) r.raise_shift(i, o.shifts_[i] - r.shifts_[i]);
    TensorH rhs = o;
    for (int i = 0; i < arity_; ++i) rhs.raise_shift(i, r.shifts_[i] - rhs.shifts_[i]);
    for (auto& [key, c] : rhs.c_) {
        auto it = r.c_.emplace(key, 0).first;
        it->second += c;
        if (it->second == 0) r.c_.erase(it);
    }
    r.normalize();
    return r;
}

TensorH TensorH::operator-(const TensorH& o) const { return *this + (-o); }

TensorH TensorH::operator-() const {
    TensorH r = *this;
    for (auto& [key, c] : r.c_) c = -c;
    return r;
}

TensorH TensorH::scaled(const Int& c) const {
    TensorH r(arity_);
    if (c == 0) return r;
    r.shifts_ = shifts_;
    for (auto& [key, v] : c_) r.c_[key] = v * c;
    r.normalize();
    return r;
}

TensorH TensorH::mul(const TensorH& o) const {
    if (arity_ != o.arity_) throw error("SlotOutOfRange", "tensor arities differ");
    TensorH r(arity_);
    for (int i = 0; i < arity_; ++i) r.shifts_[i] = shifts_[i] + o.shifts_[i];
    for (auto& [k1, c1] : c_)
        for (auto& [k2, c2] : o.c_) {
            std::vector<NumPoly> polys(arity_);
            for (int i = 0; i < arity_; ++i)
                polys[i] = alpha_mul(NumPoly::alpha(k1[i]), NumPoly::alpha(k2[i]));
            std::vector<int> key(arity_);
            Int c12 = c1 * c2;
            auto rec = [&](auto&& self, int i, const Int& c) -> void {
                if (i == arity_) {
                    auto it = r.c_.emplace(key, 0).first;
                    it->second += c;
                    if (it->second == 0) r.c_.erase(it);
                    return;
                }
                for (auto& [n, cn] : polys[i].terms()) {
                    key[i] = n;
                    self(self, i + 1, c * cn);
                }
            };
            rec(rec, 0, c12);
        }
    r.normalize();
    return r;
}

HElem TensorH::as_helem() const {
    if (arity_ != 1) throw error("SlotOutOfRange", "tensor is not arity 1");
    NumPoly f;
    for (auto& [key, c] : c_) f.add(key[0], c);
    return HElem(shifts_[0], f);
}

Int TensorH::as_scalar() const {
    if (arity_ != 0) throw error("SlotOutOfRange", "tensor is not arity 0");
    return c_.empty() ? Int(0) : c_.begin()->second;
}

HElem TensorH::fold_mul() const {
    HElem acc;
    for (auto& [key, c] : c_) {
        HElem term = HElem::one().scaled(c);
        for (int i = 0; i < arity_; ++i)
            term = term * HElem(shifts_[i], NumPoly::alpha(key[i]));
        acc = acc + term;
    }
    return acc;
}

namespace {

// coefficients of C(t1 t2, n) over C(t1, a) C(t2, b): double forward differences
std::map<std::pair<int, int>, Int> coproduct_alpha(int n) {
    std::map<std::pair<int, int>, Int> out;
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b) {
            Int c = 0;
            for (int i = 0; i <= a; ++i)
                for (int j = 0; j <= b; ++j) {
                    Int term = int_binom(Int(a), (unsigned long)i) *
                               int_binom(Int(b), (unsigned long)j) *
                               int_binom(Int(i) * Int(j), (unsigned long)n);
                    if ((a - i + b - j) % 2 == 1) term = -term;
                    c += term;
                }
            if (c != 0) out[{a, b}] = c;
        }
    return out;
}

} // namespace

TensorH coproduct(const HElem& x) {
    TensorH r(2);
    for (auto& [n, c] : x.num().terms()) {
        for (auto& [ab, d] : coproduct_alpha(n))
            r.add_term(c * d, {{x.shift(), NumPoly::alpha(ab.first)},
                               {x.shift(), NumPoly::alpha(ab.second)}});
    }
    r.normalize();
    return r;
}

TensorH tensor_slot_apply(const TensorH& x, int slot, SlotOp op) {
    if (slot < 1 || slot > x.arity())
        throw error("SlotOutOfRange",
                    "slot " + std::to_string(slot) + " outside arity " + std::to_string(x.arity()));
    int s = slot - 1;
    const auto& shifts = x.shifts();
    switch (op) {
    case SlotOp::Coproduct: {
        TensorH r(x.arity() + 1);
        for (auto& [key, c] : x.coeffs()) {
            for (auto& [ab, d] : coproduct_alpha(key[s])) {
                std::vector<std::pair<int, NumPoly>> fac;
                fac.reserve(x.arity() + 1);
                for (int i = 0; i < x.arity(); ++i) {
                    if (i == s) {
                        fac.emplace_back(shifts[i], NumPoly::alpha(ab.first));
                        fac.emplace_back(shifts[i], NumPoly::alpha(ab.second));
                    } else {
                        fac.emplace_back(shifts[i], NumPoly::alpha(key[i]));
                    }
                }
                r.add_term(c * d, fac);
            }
        }
        r.normalize();
        return r;
    }
    case SlotOp::Counit: {
        TensorH r(x.arity() - 1);
        for (auto& [key, c] : x.coeffs()) {
            if (key[s] > 1) continue; // C(1, n) = 0 for n >= 2
            std::vector<std::pair<int, NumPoly>> fac;
            for (int i = 0; i < x.arity(); ++i)
                if (i != s) fac.emplace_back(shifts[i], NumPoly::alpha(key[i]));
            r.add_term(c, fac);
        }
        r.normalize();
        return r;
    }
    case SlotOp::Antipode: {
        TensorH r(x.arity());
        for (auto& [key, c] : x.coeffs()) {
            HElem conj = antipode(HElem(0, NumPoly::alpha(key[s])));
            // slot still carries t^{shift}; fold it into the image
            std::pair<int, NumPoly> val;
            if (shifts[s] >= conj.shift())
                val = {0, t_apply_pow(conj.num(), shifts[s] - conj.shift())};
            else
                val = {conj.shift() - shifts[s], conj.num()};
            std::vector<std::pair<int, NumPoly>> fac;
            for (int i = 0; i < x.arity(); ++i) {
                if (i == s)
                    fac.push_back(val);
                else
                    fac.emplace_back(shifts[i], NumPoly::alpha(key[i]));
            }
            r.add_term(c, fac);
        }
        r.normalize();
        return r;
    }
    }
    throw error("SlotOutOfRange", "unknown slot operation");
}

Rat tensor_eval(const TensorH& x, const std::vector<Rat>& xs) {
    if ((int)xs.size() != x.arity())
        throw error("SlotOutOfRange", "evaluation point arity mismatch");
    Rat acc(0);
    for (auto& [key, c] : x.coeffs()) {
        Rat term(c);
        for (int i = 0; i < x.arity(); ++i) {
            // C(x_i, m) / x_i^{shift_i}
            Rat binom(1);
            for (int s = 0; s < key[i]; ++s) binom *= (xs[i] - s) / Rat(s + 1);
            term *= binom * rat_pow(xs[i], -x.shifts()[i]);
        }
        acc += term;
    }
    return acc;
}

CheckReport hopf_axioms_verify(const std::vector<HElem>& samples) {
    CheckReport rep;
    rep.suite = "hopf-axioms";
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const HElem& a = samples[i];
        std::string tag = "[" + std::to_string(i) + "]";
        TensorH d = coproduct(a);

        TensorH left = tensor_slot_apply(d, 1, SlotOp::Coproduct);
        TensorH right = tensor_slot_apply(d, 2, SlotOp::Coproduct);
        rep.add("coassoc" + tag, left == right);

        bool counit_ok = tensor_slot_apply(d, 1, SlotOp::Counit).as_helem() == a &&
                         tensor_slot_apply(d, 2, SlotOp::Counit).as_helem() == a;
        rep.add("counit" + tag, counit_ok);

        HElem folded = tensor_slot_apply(d, 1, SlotOp::Antipode).fold_mul();
        rep.add("antipode" + tag, folded == HElem::one().scaled(counit(a)));
    }
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
        const HElem& a = samples[i];
        const HElem& b = samples[i + 1];
        bool ok = coproduct(a * b) == coproduct(a).mul(coproduct(b));
        rep.add("delta-mult[" + std::to_string(i) + "," + std::to_string(i + 1) + "]", ok);
    }
    return rep;
}

} // namespace binocobar
