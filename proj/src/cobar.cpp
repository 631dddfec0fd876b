#include "binocobar/cobar.hpp"

#include <algorithm>
#include <sstream>

#include "binocobar/errors.hpp"

namespace binocobar {

RElem RElem::constant(const Int& c) {
    RElem r;
    r.add(0, c);
    return r;
}

RElem RElem::u_pow(int a) {
    RElem r;
    r.add(a, 1);
    return r;
}

Int RElem::coeff(int a) const {
    auto it = c_.find(a);
    return it == c_.end() ? Int(0) : it->second;
}

void RElem::add(int a, const Int& c) {
    if (c == 0) return;
    auto it = c_.emplace(a, 0).first;
    it->second += c;
    if (it->second == 0) c_.erase(it);
}

RElem RElem::operator+(const RElem& o) const {
    RElem r = *this;
    for (auto& [a, c] : o.c_) r.add(a, c);
    return r;
}

RElem RElem::operator-(const RElem& o) const { return *this + (-o); }

RElem RElem::operator-() const {
    RElem r = *this;
    for (auto& [a, c] : r.c_) c = -c;
    return r;
}

RElem RElem::operator*(const RElem& o) const {
    RElem r;
    for (auto& [a, c] : c_)
        for (auto& [b, d] : o.c_) r.add(a + b, c * d);
    return r;
}

RElem RElem::scaled(const Int& c) const {
    RElem r;
    if (c == 0) return r;
    for (auto& [a, v] : c_) r.c_[a] = v * c;
    return r;
}

std::string RElem::str() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [a, c] : c_) {
        Int v = c;
        if (first) {
            if (v < 0) { out << "-"; v = -v; }
        } else {
            out << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        first = false;
        if (v != 1 || a == 0) out << v.get_str();
        if (a != 0) {
            if (v != 1) out << "*";
            out << "u^" << a;
        }
    }
    return out.str();
}

CobarElem::CobarElem(int degree) : degree_(degree) {
    if (degree < 0) throw error("SlotOutOfRange", "negative cosimplicial degree");
}

CobarElem CobarElem::from_r(const RElem& r) {
    CobarElem x(0);
    for (auto& [a, c] : r.terms()) x.t_.emplace(a, TensorH::scalar(c));
    return x;
}

CobarElem CobarElem::monomial(int uexp, const TensorH& t) {
    CobarElem x(t.arity());
    x.add_term(uexp, t);
    return x;
}

void CobarElem::add_term(int uexp, const TensorH& t) {
    if (t.arity() != degree_)
        throw error("SlotOutOfRange", "tensor arity does not match cosimplicial degree");
    if (t.is_zero()) return;
    auto it = t_.find(uexp);
    if (it == t_.end()) {
        TensorH canon = t;
        canon.normalize(); // the stored tensors are always in canonical form
        t_.emplace(uexp, std::move(canon));
        return;
    }
    it->second = it->second + t;
    if (it->second.is_zero()) t_.erase(it);
}

CobarElem CobarElem::operator+(const CobarElem& o) const {
    if (degree_ != o.degree_)
        throw error("SlotOutOfRange", "cosimplicial degrees differ");
    CobarElem r = *this;
    for (auto& [a, t] : o.t_) r.add_term(a, t);
    return r;
}

CobarElem CobarElem::operator-(const CobarElem& o) const { return *this + (-o); }

CobarElem CobarElem::operator-() const {
    CobarElem r(degree_);
    for (auto& [a, t] : t_) r.t_.emplace(a, -t);
    return r;
}

CobarElem CobarElem::operator*(const CobarElem& o) const {
    if (degree_ != o.degree_)
        throw error("SlotOutOfRange", "cosimplicial degrees differ");
    CobarElem r(degree_);
    for (auto& [a, s] : t_)
        for (auto& [b, t] : o.t_) r.add_term(a + b, s.mul(t));
    return r;
}

CobarElem CobarElem::scaled(const Int& c) const {
    CobarElem r(degree_);
    if (c == 0) return r;
    for (auto& [a, t] : t_) r.t_.emplace(a, t.scaled(c));
    return r;
}

RElem CobarElem::as_r() const {
    if (degree_ != 0) throw error("SlotOutOfRange", "element is not degree 0");
    RElem r;
    for (auto& [a, t] : t_) r.add(a, t.as_scalar());
    return r;
}

std::string CobarElem::str() const {
    if (t_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [a, ten] : t_) {
        for (auto& [key, c] : ten.coeffs()) {
            Int v = c;
            if (first) {
                if (v < 0) { out << "-"; v = -v; }
            } else {
                out << (v < 0 ? " - " : " + ");
                if (v < 0) v = -v;
            }
            first = false;
            if (v != 1) out << v.get_str() << "*";
            out << "u^" << a;
            if (degree_ > 0) {
                out << "*(";
                for (int i = 0; i < degree_; ++i) {
                    if (i) out << " x ";
                    if (ten.shifts()[i] > 0) out << "t^-" << ten.shifts()[i] << ".";
                    out << "a" << key[i];
                }
                out << ")";
            }
        }
    }
    return out.str();
}

namespace {

HElem t_pow_h(int a) {
    if (a >= 0) return HElem(0, t_apply_pow(NumPoly::constant(1), a));
    return HElem(-a, NumPoly::constant(1));
}

} // namespace

CobarElem eta_L(const RElem& r) {
    CobarElem x(1);
    for (auto& [a, c] : r.terms()) x.add_term(a, TensorH::unit(1).scaled(c));
    return x;
}

CobarElem eta_R(const RElem& r) {
    CobarElem x(1);
    for (auto& [a, c] : r.terms())
        x.add_term(a, TensorH::from_helem(t_pow_h(a)).scaled(c));
    return x;
}

RElem gamma_counit(const CobarElem& x) {
    if (x.degree() != 1) throw error("SlotOutOfRange", "counit expects degree 1");
    RElem r;
    for (auto& [a, ten] : x.terms()) r.add(a, counit(ten.as_helem()));
    return r;
}

CobarElem gamma_conjugation(const CobarElem& x) {
    if (x.degree() != 1) throw error("SlotOutOfRange", "conjugation expects degree 1");
    CobarElem r(1);
    for (auto& [a, ten] : x.terms()) {
        // c(u^a (x) h) = u^a (x) t^a * c_H(h): the right unit re-enters
        HElem img = h_mul(t_pow_h(a), antipode(ten.as_helem()));
        r.add_term(a, TensorH::from_helem(img));
    }
    return r;
}

CobarElem coface(int i, const CobarElem& x) {
    int n = x.degree();
    if (i < 0 || i > n + 1)
        throw error("FaceIndexOutOfRange",
                    "coface " + std::to_string(i) + " on degree " + std::to_string(n));
    CobarElem out(n + 1);
    for (auto& [a, ten] : x.terms()) {
        if (i >= 1 && i <= n) {
            out.add_term(a, tensor_slot_apply(ten, i, SlotOp::Coproduct));
            continue;
        }
        // i = 0 inserts t^a in front; i = n+1 appends the unit
        HElem front = t_pow_h(a);
        TensorH r(n + 1);
        for (auto& [key, c] : ten.coeffs()) {
            std::vector<std::pair<int, NumPoly>> fac;
            fac.reserve(n + 1);
            if (i == 0) fac.emplace_back(front.shift(), front.num());
            for (int k = 0; k < n; ++k)
                fac.emplace_back(ten.shifts()[k], NumPoly::alpha(key[k]));
            if (i == n + 1) fac.emplace_back(0, NumPoly::constant(1));
            r.add_term(c, fac);
        }
        r.normalize();
        out.add_term(a, r);
    }
    return out;
}

CobarElem codegeneracy(int i, const CobarElem& x) {
    int n = x.degree();
    if (n < 1 || i < 0 || i > n - 1)
        throw error("DegeneracyIndexOutOfRange",
                    "codegeneracy " + std::to_string(i) + " on degree " + std::to_string(n));
    CobarElem out(n - 1);
    for (auto& [a, ten] : x.terms())
        out.add_term(a, tensor_slot_apply(ten, i + 1, SlotOp::Counit));
    return out;
}

CobarElem cobar_differential(const CobarElem& x) {
    CobarElem acc(x.degree() + 1);
    for (int i = 0; i <= x.degree() + 1; ++i) {
        CobarElem face = coface(i, x);
        acc = (i % 2 == 0) ? acc + face : acc - face;
    }
    return acc;
}

GradingDegree grading_degree(const CobarElem& x) {
    GradingDegree g;
    if (x.is_zero()) return g;
    g.kind = GradingDegree::Pure;
    g.value = x.terms().begin()->first;
    if (x.terms().size() > 1) g.kind = GradingDegree::Mixed;
    return g;
}

namespace {

/* Kernel of a rational matrix, solutions as columns. Plain Gaussian
 * elimination; sizes here are tiny. */
std::vector<std::vector<Rat>> rat_kernel(std::vector<std::vector<Rat>> rows, int ncols) {
    int nrows = (int)rows.size();
    std::vector<int> pivot_col;
    int lead = 0;
    for (int r = 0; r < nrows && lead < ncols; ++r) {
        int pr = -1;
        while (lead < ncols && pr < 0) {
            for (int k = r; k < nrows; ++k)
                if (rows[k][lead] != 0) {
                    pr = k;
                    break;
                }
            if (pr < 0) ++lead;
        }
        if (pr < 0) break;
        std::swap(rows[r], rows[pr]);
        Rat inv = Rat(1) / rows[r][lead];
        for (int j = 0; j < ncols; ++j) rows[r][j] *= inv;
        for (int k = 0; k < nrows; ++k) {
            if (k == r || rows[k][lead] == 0) continue;
            Rat f = rows[k][lead];
            for (int j = 0; j < ncols; ++j) rows[k][j] -= f * rows[r][j];
        }
        pivot_col.push_back(lead);
        ++lead;
    }
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(ncols, Rat(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -rows[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace

std::vector<RElem> h0_primitives(int udeg_bound) {
    if (udeg_bound < 1) throw error("SizeGuard", "bound must be at least 1");
    int ncols = 2 * udeg_bound + 1; // variables c_a, a in [-bound, bound]
    std::vector<std::vector<Rat>> rows;
    for (int a = -udeg_bound; a <= udeg_bound; ++a) {
        TensorH diff = TensorH::from_helem(t_pow_h(a)) - TensorH::unit(1);
        for (auto& [key, c] : diff.coeffs()) {
            (void)key;
            std::vector<Rat> row(ncols, Rat(0));
            row[a + udeg_bound] = Rat(c);
            rows.push_back(std::move(row));
        }
    }
    std::vector<RElem> out;
    for (auto& v : rat_kernel(std::move(rows), ncols)) {
        Int den = 1, num = 0;
        for (auto& q : v) den = den / int_gcd(den, q.get_den()) * q.get_den();
        std::vector<Int> w(ncols);
        for (int j = 0; j < ncols; ++j) {
            Rat scaled = v[j] * Rat(den);
            w[j] = scaled.get_num();
            num = int_gcd(num, w[j]);
        }
        RElem r;
        for (int j = 0; j < ncols; ++j)
            if (w[j] != 0) r.add(j - udeg_bound, w[j] / num);
        out.push_back(std::move(r));
    }
    return out;
}

FCosimplexElem::FCosimplexElem(int degree) : degree_(degree) {
    if (degree < 0) throw error("SlotOutOfRange", "negative cosimplicial degree");
}

FCosimplexElem FCosimplexElem::monomial(const std::vector<int>& alphas, const Int& c) {
    if (alphas.empty()) throw error("SlotOutOfRange", "need at least one tensor factor");
    FCosimplexElem x((int)alphas.size() - 1);
    x.add(alphas, c);
    return x;
}

void FCosimplexElem::add(const std::vector<int>& key, const Int& c) {
    if ((int)key.size() != degree_ + 1)
        throw error("SlotOutOfRange", "key length does not match cosimplicial degree");
    if (c == 0) return;
    auto it = c_.emplace(key, 0).first;
    it->second += c;
    if (it->second == 0) c_.erase(it);
}

FCosimplexElem FCosimplexElem::operator+(const FCosimplexElem& o) const {
    if (degree_ != o.degree_)
        throw error("SlotOutOfRange", "cosimplicial degrees differ");
    FCosimplexElem r = *this;
    for (auto& [k, c] : o.c_) r.add(k, c);
    return r;
}

FCosimplexElem FCosimplexElem::operator-(const FCosimplexElem& o) const {
    return *this + o.scaled(-1);
}

FCosimplexElem FCosimplexElem::scaled(const Int& c) const {
    FCosimplexElem r(degree_);
    if (c == 0) return r;
    for (auto& [k, v] : c_) r.c_[k] = v * c;
    return r;
}

FCosimplexElem f_coface(int i, const FCosimplexElem& x) {
    int n = x.degree();
    if (i < 0 || i > n + 1)
        throw error("FaceIndexOutOfRange",
                    "coface " + std::to_string(i) + " on degree " + std::to_string(n));
    FCosimplexElem out(n + 1);
    for (auto& [key, c] : x.terms()) {
        std::vector<int> k2 = key;
        k2.insert(k2.begin() + i, 0);
        out.add(k2, c);
    }
    return out;
}

FCosimplexElem f_codegeneracy(int i, const FCosimplexElem& x) {
    int n = x.degree();
    if (n < 1 || i < 0 || i > n - 1)
        throw error("DegeneracyIndexOutOfRange",
                    "codegeneracy " + std::to_string(i) + " on degree " + std::to_string(n));
    FCosimplexElem out(n - 1);
    for (auto& [key, c] : x.terms()) {
        NumPoly prod = alpha_mul(NumPoly::alpha(key[i]), NumPoly::alpha(key[i + 1]));
        for (auto& [m, pc] : prod.terms()) {
            std::vector<int> k2;
            k2.reserve(key.size() - 1);
            k2.insert(k2.end(), key.begin(), key.begin() + i);
            k2.push_back(m);
            k2.insert(k2.end(), key.begin() + i + 2, key.end());
            out.add(k2, c * pc);
        }
    }
    return out;
}

CobarElem random_cobar(Rng& rng, int degree, int max_terms, int max_uexp,
                       int max_alpha, int max_shift) {
    CobarElem x(degree);
    int terms = 1 + (int)rng.below((std::uint64_t)max_terms);
    for (int t = 0; t < terms; ++t) {
        int uexp = (int)rng.range(-max_uexp, max_uexp);
        Int coeff((long)(1 + rng.below(9)));
        if (rng.below(2)) coeff = -coeff;
        TensorH ten(degree);
        std::vector<std::pair<int, NumPoly>> fac;
        fac.reserve(degree);
        for (int k = 0; k < degree; ++k)
            fac.emplace_back((int)rng.below((std::uint64_t)max_shift + 1),
                             NumPoly::alpha((int)rng.below((std::uint64_t)max_alpha + 1)));
        ten.add_term(coeff, fac);
        x.add_term(uexp, ten);
    }
    return x;
}

CheckReport algebroid_axioms_verify(const std::vector<RElem>& rs,
                                    const std::vector<CobarElem>& gammas) {
    CheckReport rep;
    rep.suite = "algebroid-axioms";

    for (std::size_t k = 0; k < rs.size(); ++k) {
        const RElem& r = rs[k];
        std::string tag = "r[" + std::to_string(k) + "]";
        rep.add(tag + " counit-left-unit", gamma_counit(eta_L(r)) == r, r.str());
        rep.add(tag + " counit-right-unit", gamma_counit(eta_R(r)) == r, r.str());
        rep.add(tag + " conj-left-unit", gamma_conjugation(eta_L(r)) == eta_R(r), r.str());
        rep.add(tag + " conj-right-unit", gamma_conjugation(eta_R(r)) == eta_L(r), r.str());
    }

    for (std::size_t k = 0; k < gammas.size(); ++k) {
        const CobarElem& g = gammas[k];
        std::string tag = "g[" + std::to_string(k) + "]";
        rep.add(tag + " conj-involution", gamma_conjugation(gamma_conjugation(g)) == g, g.str());
        CobarElem dg = coface(1, g);
        rep.add(tag + " coassoc", coface(1, dg) == coface(2, dg), g.str());
        rep.add(tag + " counit-law-left", codegeneracy(0, dg) == g, g.str());
        rep.add(tag + " counit-law-right", codegeneracy(1, dg) == g, g.str());
    }

    /* The grouplike relation on v = u (x) t: its coproduct lands as
     * u (x) t (x) t, which is exactly the twisted placement of 1 (x) v,
     * i.e. the 0-th coface of v. */
    CobarElem v = CobarElem::monomial(1, TensorH::from_helem(HElem(0, NumPoly::alpha(1))));
    CobarElem dv = coface(1, v);
    TensorH utt(2);
    utt.add_term(1, {{0, NumPoly::alpha(1)}, {0, NumPoly::alpha(1)}});
    rep.add("v-coproduct-split", dv == CobarElem::monomial(1, utt), dv.str());
    rep.add("v-coproduct-twisted-unit", dv == coface(0, v), dv.str());
    return rep;
}

CheckReport cosimplicial_identities_verify(int maxdeg, int trials, std::uint64_t seed) {
    if (maxdeg > 3) throw error("SizeGuard", "degrees above 3 are not desk-scale");
    CheckReport rep;
    rep.suite = "cosimplicial-identities";

    struct Family {
        const char* name = "";
        long count = 0;
        bool ok = true;
        std::string first_failure;
    };
    Family face_face{"face-face"}, degen_degen{"degen-degen"}, mixed{"mixed"},
        dd{"differential-squares-to-zero"}, grading{"grading-preserved"};

    auto note = [](Family& f, bool pass, const std::string& detail) {
        ++f.count;
        if (!pass && f.ok) {
            f.ok = false;
            f.first_failure = detail;
        }
    };

    for (int trial = 0; trial < trials; ++trial) {
        Rng rng(derive_seed(seed, (std::uint64_t)trial));
        int n = (int)rng.below((std::uint64_t)maxdeg + 1);
        CobarElem x = random_cobar(rng, n, 4, 3, 5, 2);
        std::string where = "trial " + std::to_string(trial) + ", degree " +
                            std::to_string(n) + ", x = " + x.str();

        for (int i = 0; i <= n + 1; ++i)
            for (int j = i + 1; j <= n + 2; ++j)
                note(face_face, coface(j, coface(i, x)) == coface(i, coface(j - 1, x)),
                     where + ", (i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")");

        for (int i = 0; n >= 2 && i <= n - 2; ++i)
            for (int j = i; j <= n - 2; ++j)
                note(degen_degen,
                     codegeneracy(j, codegeneracy(i, x)) ==
                         codegeneracy(i, codegeneracy(j + 1, x)),
                     where + ", (i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")");

        for (int i = 0; i <= n + 1; ++i)
            for (int j = 0; j <= n; ++j) {
                CobarElem lhs = codegeneracy(j, coface(i, x));
                CobarElem want(0);
                if (i == j || i == j + 1)
                    want = x;
                else if (i < j)
                    want = coface(i, codegeneracy(j - 1, x));
                else
                    want = coface(i - 1, codegeneracy(j, x));
                note(mixed, lhs == want,
                     where + ", (i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")");
            }

        note(dd, cobar_differential(cobar_differential(x)).is_zero(), where);

        // a homogeneous element must stay homogeneous of the same u-degree
        CobarElem pool = random_cobar(rng, n, 3, 3, 5, 2);
        if (pool.is_zero()) pool = CobarElem::monomial(1, TensorH::unit(n));
        CobarElem h = CobarElem::monomial(pool.terms().begin()->first,
                                          pool.terms().begin()->second);
        GradingDegree gh = grading_degree(h);
        bool graded_ok = true;
        for (int i = 0; i <= n + 1 && graded_ok; ++i) {
            GradingDegree gf = grading_degree(coface(i, h));
            graded_ok = gf.kind == GradingDegree::Zero || gf == gh;
        }
        for (int i = 0; n >= 1 && i <= n - 1 && graded_ok; ++i) {
            GradingDegree gs = grading_degree(codegeneracy(i, h));
            graded_ok = gs.kind == GradingDegree::Zero || gs == gh;
        }
        note(grading, graded_ok, "trial " + std::to_string(trial) + ", h = " + h.str());
    }

    for (Family* f : {&face_face, &degen_degen, &mixed, &dd, &grading})
        rep.add(f->name, f->ok,
                f->ok ? std::to_string(f->count) + " instances"
                      : "counterexample: " + f->first_failure);
    return rep;
}

} // namespace binocobar
