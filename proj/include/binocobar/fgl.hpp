#pragma once
#include <utility>

#include "binocobar/cobar.hpp"
#include "binocobar/multipoly.hpp"

namespace binocobar {

/* One-dimensional formal group law truncated at total degree D, with
 * coefficients in C (concrete Laurent coefficients or symbols). The
 * linear terms x + y are implicit; a law marked exact promises that every
 * coefficient outside the stored map is genuinely zero, not truncated
 * away, so its power expansions never lose terms. */
template <typename C>
class FglLaw {
public:
    FglLaw(int trunc, bool exact, bool symmetric)
        : trunc_(trunc), exact_(exact), symmetric_(symmetric) {
        if (trunc < 2) throw error("SizeGuard", "truncation degree must be at least 2");
    }

    int trunc() const { return trunc_; }
    bool exact() const { return exact_; }
    bool symmetric() const { return symmetric_; }
    const std::map<std::pair<int, int>, C>& coeffs() const { return a_; }

    void set_coeff(int i, int j, const C& c) {
        if (i < 1 || j < 1 || i + j > trunc_)
            throw error("SizeGuard", "coefficient index outside the truncation");
        if (symmetric_ && i > j) std::swap(i, j);
        if (c.is_zero())
            a_.erase({i, j});
        else
            a_[{i, j}] = c;
    }

    C coeff(int i, int j) const {
        if (symmetric_ && i > j) std::swap(i, j);
        auto it = a_.find({i, j});
        return it == a_.end() ? C() : it->second;
    }

private:
    int trunc_;
    bool exact_;
    bool symmetric_;
    std::map<std::pair<int, int>, C> a_;
};

FglLaw<RElem> mult_law(int D);        // x + y + u x y
FglLaw<MultiPoly> generic_law(int D); // independent symmetric symbols a(i,j)

std::string fgl_symbol(int i, int j);

/* Coefficient of x^i y^j in mu(x,y)^k. Every factor of mu has total
 * degree >= 1, so contributions to degree i+j only involve law
 * coefficients up to degree i+j-k+1; beyond the truncation that is not
 * available and the extraction must refuse rather than silently drop
 * symbols. Exact laws are never truncated. */
template <typename C>
C power_coeff(const FglLaw<C>& f, int k, int i, int j) {
    if (k < 0) throw error("SizeGuard", "negative power");
    if (i < 0 || j < 0) return C();
    if (!f.exact() && k >= 1 && i + j - k + 1 > f.trunc())
        throw error("TruncationExceeded",
                    "degree " + std::to_string(i + j) + " needs law coefficients past " +
                        std::to_string(f.trunc()));
    int cap = i + j;
    using Biv = std::map<std::pair<int, int>, C>;
    Biv mu;
    auto put = [&](int a, int b, const C& c) {
        if (a + b > cap || c.is_zero()) return;
        auto it = mu.find({a, b});
        if (it == mu.end())
            mu[{a, b}] = c;
        else {
            it->second = it->second + c;
            if (it->second.is_zero()) mu.erase(it);
        }
    };
    put(1, 0, C::constant(1));
    put(0, 1, C::constant(1));
    for (auto& [ij, c] : f.coeffs()) {
        put(ij.first, ij.second, c);
        if (f.symmetric() && ij.first != ij.second) put(ij.second, ij.first, c);
    }
    Biv acc;
    acc[{0, 0}] = C::constant(1);
    for (int s = 0; s < k; ++s) {
        Biv next;
        for (auto& [d1, c1] : acc)
            for (auto& [d2, c2] : mu) {
                int a = d1.first + d2.first, b = d1.second + d2.second;
                if (a + b > cap) continue;
                C prod = c1 * c2;
                if (prod.is_zero()) continue;
                auto it = next.emplace(std::make_pair(a, b), C()).first;
                it->second = it->second + prod;
                if (it->second.is_zero()) next.erase(it);
            }
        acc = std::move(next);
    }
    auto it = acc.find({i, j});
    return it == acc.end() ? C() : it->second;
}

RElem mult_coeff_closed_form(int k, int i, int j);

CheckReport adams_a1jk_check(int D);

/* Vector over the beta basis with coefficients in R. */
class BetaVec {
public:
    BetaVec() = default;
    static BetaVec beta(int n);

    const std::map<int, RElem>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    BetaVec operator+(const BetaVec& o) const;
    BetaVec operator-(const BetaVec& o) const;
    BetaVec operator-() const;
    BetaVec operator*(const BetaVec& o) const; // beta_0 is the unit
    BetaVec scaled(const RElem& c) const;
    bool operator==(const BetaVec& o) const { return c_ == o.c_; }

    void add(int n, const RElem& c);

private:
    std::map<int, RElem> c_;
};

BetaVec b_operator(const BetaVec& x); // beta_n -> n u beta_n + (n+1) beta_{n+1}

// (j,k) entry of the b-operator for a law: k * a_{1, 1+j-k}, with
// a_{1,0} = 1 for the linear term and vanishing negative indices.
template <typename C>
C b_matrix_entry(int j, int k, const FglLaw<C>& f) {
    if (j < 0 || k < 0) throw error("SizeGuard", "negative basis index");
    int m = 1 + j - k;
    if (m < 0 || k == 0) return C();
    C val;
    if (m == 0)
        val = C::constant(1);
    else {
        if (!f.exact() && 1 + m > f.trunc())
            throw error("TruncationExceeded",
                        "law coefficient (1," + std::to_string(m) + ") past the truncation");
        val = f.coeff(1, m);
    }
    return val.scaled(Int(k));
}

/* Polynomial in the binomial basis with coefficients in R. */
class RNumPoly {
public:
    RNumPoly() = default;

    const std::map<int, RElem>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool operator==(const RNumPoly& o) const { return c_ == o.c_; }

    void add(int n, const RElem& c);

private:
    std::map<int, RElem> c_;
};

/* beta_n = u^n alpha_n: returns (scale, p) with scale a single monomial
 * g u^m carrying the content and the minimal u-power, and scale * p the
 * rewritten element. */
std::pair<RElem, RNumPoly> beta_to_alpha(const BetaVec& x);
BetaVec alpha_to_beta(const RElem& scale, const RNumPoly& p);

// Class of x at the given telescope stage inside R (x) H, i.e.
// v^{-stage} times the beta expansion with v = u t inverted slotwise.
CobarElem telescope_colimit_map(int stage, const BetaVec& x);

// A stage and vector mapping onto 1 (x) h; stage is the shift of h.
std::pair<int, BetaVec> telescope_preimage(const HElem& h);

} // namespace binocobar
