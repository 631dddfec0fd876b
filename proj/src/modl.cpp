#include "binocobar/modl.hpp"

#include <algorithm>
#include <stdexcept>

namespace binocobar {

ModInt::ModInt(const Int& v, const Int& q) : v_(v), q_(q) {
    if (q <= 0) throw std::logic_error("modulus must be positive");
    v_ %= q_;
    if (v_ < 0) v_ += q_;
}

void ModInt::check(const ModInt& o) const {
    if (q_ != o.q_) throw std::logic_error("modulus mismatch");
}

ModInt ModInt::operator+(const ModInt& o) const {
    check(o);
    return ModInt(v_ + o.v_, q_);
}
ModInt ModInt::operator-(const ModInt& o) const {
    check(o);
    return ModInt(v_ - o.v_, q_);
}
ModInt ModInt::operator*(const ModInt& o) const {
    check(o);
    return ModInt(v_ * o.v_, q_);
}
ModInt ModInt::operator-() const { return ModInt(-v_, q_); }

bool is_prime(const Int& p) {
    if (p < 2) return false;
    return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

namespace zq {

int val_of(const Int& v, const Int& ell, int nu) {
    if (v == 0) return nu;
    Int w = v;
    int e = 0;
    while (e < nu && w % ell == 0) {
        w /= ell;
        ++e;
    }
    return e;
}

Col zero_col(int d, const Int& q) { return Col(d, ModInt(0, q)); }

Cols identity(int d, const Int& q) {
    Cols id(d, zero_col(d, q));
    for (int i = 0; i < d; ++i) id[i][i] = ModInt(1, q);
    return id;
}

Col matvec(const Cols& a, const Col& x) {
    if (a.size() != x.size()) throw std::logic_error("matvec size mismatch");
    if (a.empty()) return {};
    int d = (int)a[0].size();
    Col r = zero_col(d, a[0][0].modulus());
    for (std::size_t j = 0; j < a.size(); ++j)
        for (int i = 0; i < d; ++i) r[i] = r[i] + a[j][i] * x[j];
    return r;
}

Cols matmul(const Cols& a, const Cols& b) {
    Cols r;
    r.reserve(b.size());
    for (auto& col : b) r.push_back(matvec(a, col));
    return r;
}

namespace {

bool col_is_zero(const Col& c) {
    for (auto& x : c)
        if (!x.is_zero()) return false;
    return true;
}

void scale_col(Col& c, const Int& s) {
    for (auto& x : c) x = x * ModInt(s, x.modulus());
}

// factor taken by value: callers pass entries of c itself, which the loop
// overwrites
void axpy(Col& c, const Int factor, const Col& p) {
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = c[i] - ModInt(factor, c[i].modulus()) * p[i];
}

Int unit_inverse(const Int& v, const Int& q) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), v.get_mpz_t(), q.get_mpz_t()) == 0)
        throw std::logic_error("not a unit");
    return r;
}

/* Shared elimination engine. Processes rows 0..row_limit-1; returns the
 * pivot columns (ordered by pivot row) and whatever active columns are
 * left, which then vanish on the processed rows. The annihilator shadow
 * ell^(nu-e) * pivot is re-queued so the span keeps its Howell property. */
struct Engine {
    Cols pivots;
    std::vector<int> rows;
    std::vector<int> leads;
    Cols leftover;
};

Engine eliminate(Cols cols, int row_limit, const Int& ell, int nu) {
    Int q = int_pow(ell, (unsigned long)nu);
    Engine eng;
    Cols active;
    for (auto& c : cols)
        if (!col_is_zero(c)) active.push_back(c);
    for (int r = 0; r < row_limit; ++r) {
        int best = -1, best_val = nu;
        for (std::size_t j = 0; j < active.size(); ++j) {
            int e = val_of(active[j][r].value(), ell, nu);
            if (e < best_val) {
                best_val = e;
                best = (int)j;
            }
        }
        if (best < 0) continue;
        Col piv = active[best];
        active.erase(active.begin() + best);
        int e = best_val;
        Int lead = int_pow(ell, (unsigned long)e);
        scale_col(piv, unit_inverse(piv[r].value() / lead, q)); // now piv[r] = ell^e
        for (auto& c : active) {
            if (c[r].is_zero()) continue;
            axpy(c, c[r].value() / lead, piv);
        }
        Int shadow_scale = int_pow(ell, (unsigned long)(nu - e));
        if (shadow_scale < q) {
            Col shadow = piv;
            scale_col(shadow, shadow_scale);
            if (!col_is_zero(shadow)) active.push_back(shadow);
        }
        eng.pivots.push_back(std::move(piv));
        eng.rows.push_back(r);
        eng.leads.push_back(e);
    }
    for (auto& c : active)
        if (!col_is_zero(c)) eng.leftover.push_back(c);
    return eng;
}

} // namespace

Cols howell(Cols cols, const Int& ell, int nu) {
    if (cols.empty()) return {};
    int d = (int)cols[0].size();
    Engine eng = eliminate(std::move(cols), d, ell, nu);
    // reduce earlier pivots at later pivot rows for a unique normal form
    for (std::size_t k = 0; k < eng.pivots.size(); ++k) {
        Int lead = int_pow(ell, (unsigned long)eng.leads[k]);
        for (std::size_t j = 0; j < k; ++j) {
            Int v = eng.pivots[j][eng.rows[k]].value();
            Int f = v / lead; // floor division of canonical representatives
            if (f != 0) axpy(eng.pivots[j], f, eng.pivots[k]);
        }
    }
    return eng.pivots;
}

bool span_equal(const Cols& a, const Cols& b, const Int& ell, int nu) {
    return howell(a, ell, nu) == howell(b, ell, nu);
}

bool in_span(Col v, const Cols& howell_cols, const Int& ell, int nu) {
    for (auto& p : howell_cols) {
        int r = 0;
        while (r < (int)p.size() && p[r].is_zero()) ++r;
        int e = val_of(p[r].value(), ell, nu);
        if (v[r].is_zero()) continue;
        if (val_of(v[r].value(), ell, nu) < e) return false;
        axpy(v, v[r].value() / int_pow(ell, (unsigned long)e), p);
    }
    return col_is_zero(v);
}

Int span_size(const Cols& howell_cols, const Int& ell, int nu) {
    Int size = 1;
    for (auto& p : howell_cols) {
        int r = 0;
        while (r < (int)p.size() && p[r].is_zero()) ++r;
        int e = val_of(p[r].value(), ell, nu);
        size *= int_pow(ell, (unsigned long)(nu - e));
    }
    return size;
}

Cols kernel(const Cols& a, const Int& ell, int nu) {
    if (a.empty()) return {};
    Int q = a[0][0].modulus();
    int d = (int)a[0].size();
    int n = (int)a.size();
    Cols stacked;
    for (int j = 0; j < n; ++j) {
        Col c = a[j];
        c.resize(d + n, ModInt(0, q));
        c[d + j] = ModInt(1, q);
        stacked.push_back(std::move(c));
    }
    Engine eng = eliminate(std::move(stacked), d, ell, nu);
    Cols bottoms;
    for (auto& c : eng.leftover) bottoms.push_back(Col(c.begin() + d, c.end()));
    return howell(std::move(bottoms), ell, nu);
}

std::optional<UnitBasis> unit_basis(Cols cols, const Int& ell, int nu) {
    if (cols.empty()) return UnitBasis{};
    Int q = cols[0][0].modulus();
    int d = (int)cols[0].size();
    UnitBasis ub;
    std::vector<bool> used_row(d, false);
    while (true) {
        int prow = -1, pcol = -1;
        for (int r = 0; r < d && prow < 0; ++r) {
            if (used_row[r]) continue;
            for (std::size_t j = 0; j < cols.size(); ++j)
                if (val_of(cols[j][r].value(), ell, nu) == 0) {
                    prow = r;
                    pcol = (int)j;
                    break;
                }
        }
        if (prow < 0) break;
        Col piv = cols[pcol];
        cols.erase(cols.begin() + pcol);
        scale_col(piv, unit_inverse(piv[prow].value(), q));
        for (auto& c : cols)
            if (!c[prow].is_zero()) axpy(c, c[prow].value(), piv);
        for (auto& b : ub.basis)
            if (!b[prow].is_zero()) axpy(b, b[prow].value(), piv);
        used_row[prow] = true;
        ub.basis.push_back(std::move(piv));
        ub.pivot_rows.push_back(prow);
    }
    for (auto& c : cols)
        if (!col_is_zero(c)) return std::nullopt; // span is not free on unit pivots
    return ub;
}

std::optional<Cols> inverse(const Cols& a, const Int& ell, int nu) {
    if (a.empty()) return Cols{};
    Int q = a[0][0].modulus();
    int d = (int)a[0].size();
    if ((int)a.size() != d) return std::nullopt;
    // Gauss-Jordan on [A | I]; every pivot must be a unit
    Cols work = a;
    Cols inv = identity(d, q);
    for (int r = 0; r < d; ++r) {
        int pc = -1;
        for (int j = r; j < d; ++j)
            if (val_of(work[j][r].value(), ell, nu) == 0) {
                pc = j;
                break;
            }
        if (pc < 0) return std::nullopt;
        std::swap(work[r], work[pc]);
        std::swap(inv[r], inv[pc]);
        Int s = unit_inverse(work[r][r].value(), q);
        scale_col(work[r], s);
        scale_col(inv[r], s);
        for (int j = 0; j < d; ++j) {
            if (j == r || work[j][r].is_zero()) continue;
            Int f = work[j][r].value();
            axpy(work[j], f, work[r]);
            axpy(inv[j], f, inv[r]);
        }
    }
    return inv;
}

} // namespace zq

EndoMap block_endo(const Int& ell, int nu, int k) {
    if (!is_prime(ell)) throw error("InvalidPrime", ell.get_str() + " is not prime");
    if (nu < 1) throw error("SizeGuard", "exponent must be >= 1");
    EndoMap m;
    m.ell = ell;
    m.nu = nu;
    m.q = int_pow(ell, (unsigned long)nu);
    m.dim = (int)ell.get_si();
    m.cols.assign(m.dim, zq::zero_col(m.dim, m.q));
    for (int i = 0; i < m.dim; ++i) {
        Int diag = Int(k) * ell + i;
        m.cols[i][i] = ModInt(diag, m.q);
        if (i + 1 < m.dim) m.cols[i][i + 1] = ModInt(diag + 1, m.q);
    }
    return m;
}

EndoMap t_block_endo(const Int& ell, int nu) {
    if (!is_prime(ell)) throw error("InvalidPrime", ell.get_str() + " is not prime");
    if (nu < 1) throw error("SizeGuard", "exponent must be >= 1");
    Int q = int_pow(ell, (unsigned long)nu);
    if (q > 4096) throw error("SizeGuard", "block dimension " + q.get_str() + " too large");
    EndoMap m;
    m.ell = ell;
    m.nu = nu;
    m.q = q;
    m.dim = (int)q.get_si();
    m.cols.assign(m.dim, zq::zero_col(m.dim, m.q));
    for (int i = 0; i < m.dim; ++i) {
        m.cols[i][i] = ModInt(i, m.q);
        if (i + 1 < m.dim) m.cols[i][i + 1] = ModInt(i + 1, m.q);
        // the overflow term carries coefficient q = 0, so nothing leaves
    }
    return m;
}

LocalizedModule eventual_localization(const EndoMap& m) {
    LocalizedModule loc;
    loc.ell = m.ell;
    loc.nu = m.nu;
    loc.q = m.q;
    loc.ambient_dim = m.dim;
    if (m.dim == 0) return loc;

    long long target = (long long)m.dim * m.nu;
    zq::Cols power = m.cols;
    long long n = 1;
    while (n < target) {
        power = zq::matmul(power, power);
        n *= 2;
    }
    zq::Cols next = zq::matmul(power, power);
    if (!zq::span_equal(power, next, m.ell, m.nu))
        throw error("NotStabilized", "image chain still shrinking past the bound");

    auto ub = zq::unit_basis(power, m.ell, m.nu);
    if (!ub) throw error("NotStabilized", "stable image has no unit-pivot basis");
    loc.basis = ub->basis;
    loc.pivot_rows = ub->pivot_rows;

    int r = (int)loc.basis.size();
    loc.action.assign(r, zq::Col(r, ModInt(0, m.q)));
    for (int j = 0; j < r; ++j) {
        zq::Col w = zq::matvec(m.cols, loc.basis[j]);
        for (int i = 0; i < r; ++i) {
            loc.action[j][i] = w[loc.pivot_rows[i]];
            for (std::size_t t = 0; t < w.size(); ++t)
                w[t] = w[t] - loc.action[j][i] * loc.basis[i][t];
        }
        for (auto& x : w)
            if (!x.is_zero())
                throw error("NotStabilized", "action does not preserve the stable image");
    }
    if (!zq::inverse(loc.action, m.ell, m.nu))
        throw error("NotStabilized", "induced action is not invertible");
    return loc;
}

CheckReport hq_basis_check(const Int& ell, int nu) {
    if (!is_prime(ell)) throw error("InvalidPrime", ell.get_str() + " is not prime");
    Int q = int_pow(ell, (unsigned long)nu);
    if (q > 64) throw error("SizeGuard", "modulus " + q.get_str() + " exceeds the guard (64)");
    CheckReport rep;
    rep.suite = "hq-basis(q=" + q.get_str() + ")";

    EndoMap m = t_block_endo(ell, nu);
    LocalizedModule loc = eventual_localization(m);
    int d = (int)q.get_si();

    /* The classes of the a_i live in the colimit of repeated application
     * of the map; identifying the colimit with the stable image sends the
     * stage-0 class of a_i to phi^M(a_i) for any M past stabilization.
     * The a_i themselves need not lie in the stable image. */
    long long target = (long long)d * nu;
    zq::Cols power = m.cols;
    for (long long n = 1; n < target; n *= 2) power = zq::matmul(power, power);

    zq::Cols classes;
    std::string idx;
    for (int i = 1; i < d; ++i) {
        if (Int(i) % ell == 0) continue;
        zq::Col e = zq::zero_col(d, q);
        e[i] = ModInt(1, q);
        classes.push_back(zq::matvec(power, e));
        idx += (idx.empty() ? "" : ",") + std::to_string(i);
    }
    rep.add("rank", (int)loc.basis.size() == (int)classes.size(),
            "stable rank " + std::to_string(loc.basis.size()) + ", index count " +
                std::to_string(classes.size()));
    /* As many generators as the free rank over a local ring: spanning
     * alone makes them a basis. */
    rep.add("classes-span", zq::span_equal(loc.basis, classes, ell, nu),
            "classes of {a_i : i in {" + idx + "}}, stable size " +
                zq::span_size(zq::howell(loc.basis, ell, nu), ell, nu).get_str());
    return rep;
}

namespace {

Int det_int(std::vector<std::vector<Int>> m) {
    // Laplace expansion; dimensions stay tiny
    std::size_t d = m.size();
    if (d == 0) return 1;
    if (d == 1) return m[0][0];
    Int acc = 0;
    for (std::size_t j = 0; j < d; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<Int>> sub(d - 1, std::vector<Int>(d - 1));
        for (std::size_t r = 1; r < d; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < d; ++c) {
                if (c == j) continue;
                sub[r - 1][cc++] = m[r][c];
            }
        }
        Int term = m[0][j] * det_int(sub);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

} // namespace

CheckReport lemma_Mb_check(const Int& ell, int nu, int k) {
    EndoMap m = block_endo(ell, nu, k); // validates the prime
    CheckReport rep;
    rep.suite = "block-unit(l=" + ell.get_str() + ",nu=" + std::to_string(nu) +
                ",k=" + std::to_string(k) + ")";
    int d = m.dim;

    // restriction away from a_0: rows/columns 1..ell-1 (an integer matrix)
    std::vector<std::vector<Int>> sub(d - 1, std::vector<Int>(d - 1, 0));
    for (int j = 1; j < d; ++j)
        for (int i = 1; i < d; ++i) sub[i - 1][j - 1] = m.cols[j][i].value();
    Int det = det_int(sub) % m.q;
    if (det < 0) det += m.q;

    Int closed = 1;
    for (int i = 1; i < d; ++i) closed = (closed * (Int(k) * ell + i)) % m.q;
    rep.add("det-closed-form", det == closed,
            "det = " + det.get_str() + ", product form = " + closed.get_str());
    rep.add("det-unit", zq::val_of(det, ell, nu) == 0, "det = " + det.get_str());

    zq::Col w = zq::zero_col(d, m.q);
    w[0] = ModInt(1, m.q);
    for (int s = 0; s < nu; ++s) w = zq::matvec(m.cols, w);
    rep.add("iterate-clears-a0", w[0].is_zero(),
            "a_0 component after " + std::to_string(nu) + " steps: " + w[0].value().get_str());
    return rep;
}

} // namespace binocobar
