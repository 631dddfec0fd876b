#include "binocobar/numpoly.hpp"

#include <vector>

namespace binocobar {

NumPoly NumPoly::alpha(int n) {
    if (n < 0) throw error("NegativeExponent", "basis index must be nonnegative");
    NumPoly p;
    p.add(n, 1);
    return p;
}

NumPoly NumPoly::constant(const Int& c) {
    NumPoly p;
    p.add(0, c);
    return p;
}

Int NumPoly::coeff(int n) const {
    auto it = c_.find(n);
    return it == c_.end() ? Int(0) : it->second;
}

int NumPoly::max_index() const { return c_.empty() ? 0 : c_.rbegin()->first; }

void NumPoly::add(int n, const Int& c) {
    auto it = c_.emplace(n, 0).first;
    it->second += c;
    if (it->second == 0) c_.erase(it);
}

NumPoly NumPoly::operator+(const NumPoly& o) const {
    NumPoly r = *this;
    for (auto& [n, c] : o.c_) r.add(n, c);
    return r;
}

NumPoly NumPoly::operator-(const NumPoly& o) const {
    NumPoly r = *this;
    for (auto& [n, c] : o.c_) r.add(n, -c);
    return r;
}

NumPoly NumPoly::operator-() const {
    NumPoly r;
    for (auto& [n, c] : c_) r.c_[n] = -c;
    return r;
}

NumPoly NumPoly::scaled(const Int& c) const {
    NumPoly r;
    if (c == 0) return r;
    for (auto& [n, v] : c_) r.c_[n] = v * c;
    return r;
}

Int multinomial(int k, int a, int b, int c) {
    if (a + b + c != k)
        throw error("PartitionMismatch", "multinomial parts must sum to the top index");
    if (a < 0 || b < 0 || c < 0) return 0;
    // k! / (a! b! c!) = C(k, a) * C(k - a, b)
    return int_binom(Int(k), (unsigned long)a) * int_binom(Int(k - a), (unsigned long)b);
}

NumPoly alpha_mul(const NumPoly& a, const NumPoly& b) {
    NumPoly r;
    for (auto& [i, ci] : a.terms())
        for (auto& [j, cj] : b.terms()) {
            Int cij = ci * cj;
            for (int k = std::max(i, j); k <= i + j; ++k)
                r.add(k, cij * multinomial(k, k - i, k - j, i + j - k));
        }
    return r;
}

LaurentPoly to_monomial(const NumPoly& a) {
    LaurentPoly out;
    for (auto& [n, c] : a.terms()) {
        // t (t-1) ... (t-n+1) / n!
        LaurentPoly basis = LaurentPoly::constant(Rat(1));
        for (int i = 0; i < n; ++i)
            basis = basis * (LaurentPoly::t() - LaurentPoly::constant(Rat(i)));
        out = out + basis.scaled(make_rat(c, factorial((unsigned long)n)));
    }
    return out;
}

std::optional<NumPoly> try_from_monomial(const LaurentPoly& p) {
    if (!p.is_zero() && p.lowest_exp() < 0)
        throw error("NegativeExponent", "not a polynomial: negative powers of t");
    int d = p.is_zero() ? 0 : p.highest_exp();
    std::vector<Rat> vals(d + 1);
    for (int x = 0; x <= d; ++x) vals[x] = p.eval(Rat(x));
    NumPoly out;
    for (int n = 0; n <= d; ++n) {
        if (!rat_is_int(vals[0])) return std::nullopt;
        out.add(n, Int(vals[0].get_num()));
        for (int x = 0; x + n < d; ++x) vals[x] = vals[x + 1] - vals[x];
    }
    return out;
}

NumPoly from_monomial(const LaurentPoly& p) {
    auto r = try_from_monomial(p);
    if (!r) throw error("NotNumerical", "polynomial takes non-integer values on Z");
    return *r;
}

bool is_numerical(const LaurentPoly& p) {
    if (!p.is_zero() && p.lowest_exp() < 0) return false;
    return try_from_monomial(p).has_value();
}

NumPoly t_apply(const NumPoly& a) {
    NumPoly r;
    for (auto& [n, c] : a.terms()) {
        r.add(n, c * n);
        r.add(n + 1, c * (n + 1));
    }
    return r;
}

NumPoly t_apply_pow(const NumPoly& a, int k) {
    NumPoly r = a;
    for (int i = 0; i < k; ++i) r = t_apply(r);
    return r;
}

std::optional<NumPoly> div_t(const NumPoly& a) {
    if (a.is_zero()) return a;
    // constant term of the monomial form is exactly the a_0 coefficient
    if (a.coeff(0) != 0) return std::nullopt;
    return try_from_monomial(to_monomial(a).shifted(-1));
}

NumPoly lambda_op(const NumPoly& a, int n) {
    if (n < 0) throw error("NegativeExponent", "lambda operations need n >= 0");
    LaurentPoly p = to_monomial(a);
    LaurentPoly prod = LaurentPoly::constant(Rat(1));
    for (int i = 0; i < n; ++i) prod = prod * (p - LaurentPoly::constant(Rat(i)));
    return from_monomial(prod.scaled(make_rat(1, factorial((unsigned long)n))));
}

Int eval_at(const NumPoly& a, const Int& x) {
    if (x >= 0) {
        Int acc = 0;
        for (auto& [n, c] : a.terms()) acc += c * int_binom(x, (unsigned long)n);
        return acc;
    }
    Rat v = to_monomial(a).eval(Rat(x));
    if (!rat_is_int(v)) throw error("NotNumerical", "non-integer value at an integer point");
    return Int(v.get_num());
}

} // namespace binocobar
