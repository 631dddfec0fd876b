#include "binocobar/verify.hpp"

#include <algorithm>
#include <tuple>

#include "binocobar/fgl.hpp"
#include "binocobar/modl.hpp"

namespace binocobar {

namespace {

NumPoly rand_poly(Rng& rng, int max_idx, int max_terms, int max_c) {
    NumPoly p;
    int k = 1 + (int)rng.below(max_terms);
    for (int s = 0; s < k; ++s) {
        Int c = (long)rng.range(-max_c, max_c);
        p.add((int)rng.below(max_idx + 1), c);
    }
    return p;
}

HElem rand_helem(Rng& rng, int max_shift, int max_idx, int max_terms, int max_c) {
    return HElem((int)rng.below(max_shift + 1), rand_poly(rng, max_idx, max_terms, max_c));
}

RElem rand_relem(Rng& rng, int max_exp, int max_terms, int max_c) {
    RElem r;
    int k = 1 + (int)rng.below(max_terms);
    for (int s = 0; s < k; ++s) r.add((int)rng.range(-max_exp, max_exp), Int((long)rng.range(-max_c, max_c)));
    return r;
}

BetaVec rand_beta(Rng& rng, int max_idx, int max_terms) {
    BetaVec v;
    int k = 1 + (int)rng.below(max_terms);
    for (int s = 0; s < k; ++s) v.add((int)rng.below(max_idx + 1), rand_relem(rng, 2, 2, 5));
    return v;
}

void absorb(CheckReport& into, const CheckReport& sub) {
    for (auto& c : sub.cases) into.add(sub.suite + "/" + c.name, c.pass, c.detail);
}

std::string trial_name(const char* what, int i) {
    return std::string(what) + "/trial" + std::to_string(i);
}

} // namespace

CheckReport verify_numpoly(std::uint64_t seed, int trials) {
    CheckReport rep;
    rep.suite = "numpoly";

    NumPoly a2sq;
    a2sq.add(2, 1);
    a2sq.add(3, 6);
    a2sq.add(4, 6);
    rep.add("alpha2-squared", alpha_mul(NumPoly::alpha(2), NumPoly::alpha(2)) == a2sq);

    NumPoly tmul;
    tmul.add(1, 1);
    tmul.add(2, 4);
    tmul.add(3, 3);
    rep.add("t-multiplication", t_apply(NumPoly::alpha(1) + NumPoly::alpha(2)) == tmul);

    rep.add("lambda-square", lambda_op(NumPoly::alpha(1), 2) == NumPoly::alpha(2));

    for (int i = 0; i < trials; ++i) {
        Rng rng(derive_seed(seed, i));
        NumPoly p = rand_poly(rng, 8, 4, 9);
        NumPoly q = rand_poly(rng, 8, 4, 9);
        NumPoly r = rand_poly(rng, 8, 4, 9);
        rep.add(trial_name("mul-commutes", i), alpha_mul(p, q) == alpha_mul(q, p));
        rep.add(trial_name("mul-associates", i),
                alpha_mul(alpha_mul(p, q), r) == alpha_mul(p, alpha_mul(q, r)));
        rep.add(trial_name("mul-distributes", i),
                alpha_mul(p, q + r) == alpha_mul(p, q) + alpha_mul(p, r));
        rep.add(trial_name("unit", i), alpha_mul(p, NumPoly::constant(1)) == p);
        auto back = try_from_monomial(to_monomial(p));
        rep.add(trial_name("basis-roundtrip", i), back && *back == p);
        Int x = (long)rng.range(-6, 6);
        rep.add(trial_name("eval-multiplicative", i),
                eval_at(alpha_mul(p, q), x) == eval_at(p, x) * eval_at(q, x));
        auto quot = div_t(t_apply(p));
        rep.add(trial_name("t-div", i), quot && *quot == p);
    }
    return rep;
}

CheckReport verify_hopf(std::uint64_t seed, int trials) {
    CheckReport rep;
    rep.suite = "hopf";

    std::vector<HElem> samples;
    for (int n = 0; n <= 5; ++n) samples.emplace_back(0, NumPoly::alpha(n));
    for (int i = 0; i < trials; ++i) {
        Rng rng(derive_seed(seed, i));
        samples.push_back(rand_helem(rng, 2, 6, 3, 9));
    }
    absorb(rep, hopf_axioms_verify(samples));

    for (int i = 0; i < trials; ++i) {
        Rng rng(derive_seed(seed, 1000000 + i));
        HElem a = rand_helem(rng, 2, 6, 3, 9);
        HElem b = rand_helem(rng, 2, 6, 3, 9);
        rep.add(trial_name("antipode-involution", i), antipode(antipode(a)) == a);
        rep.add(trial_name("counit-multiplicative", i),
                counit(h_mul(a, b)) == counit(a) * counit(b));
        rep.add(trial_name("laurent-roundtrip", i), h_from_laurent(to_laurent(a)) == a);
    }
    return rep;
}

CheckReport verify_modl(std::uint64_t seed, int trials) {
    CheckReport rep;
    rep.suite = "modl";

    for (auto& [l, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {2, 3}, {3, 2}})
        absorb(rep, hq_basis_check(l, n));
    for (auto& [l, n, k] : std::vector<std::tuple<int, int, int>>{{2, 2, 1}, {3, 1, 0}, {5, 1, 2}})
        absorb(rep, lemma_Mb_check(l, n, k));

    const int primes[3] = {2, 3, 5};
    for (int i = 0; i < trials; ++i) {
        Rng rng(derive_seed(seed, i));
        Int ell = primes[rng.below(3)];
        int nu = 1 + (int)rng.below(2);
        Int q = 1;
        for (int s = 0; s < nu; ++s) q *= ell;
        int dim = 2 + (int)rng.below(3);
        EndoMap m{ell, nu, q, dim, {}};
        m.cols.reserve(dim);
        for (int c = 0; c < dim; ++c) {
            zq::Col col;
            for (int r = 0; r < dim; ++r) col.emplace_back(rng.below(64), q);
            m.cols.push_back(std::move(col));
        }
        try {
            LocalizedModule loc = eventual_localization(m);
            bool ok = true;
            if (loc.basis.empty()) {
                // nilpotent part only: the stable image is zero
                zq::Cols power = m.cols;
                for (int s = 0; s < 8; ++s) power = zq::matmul(power, power);
                for (auto& col : power)
                    for (auto& e : col) ok = ok && e.is_zero();
                rep.add(trial_name("zero-localization", i), ok);
            } else {
                rep.add(trial_name("action-intertwines", i),
                        zq::matmul(m.cols, loc.basis) == zq::matmul(loc.basis, loc.action));
                auto inv = zq::inverse(loc.action, ell, nu);
                rep.add(trial_name("action-invertible", i), inv.has_value());
            }
        } catch (const error& e) {
            rep.add(trial_name("localization", i), false, e.kind());
        }
    }
    return rep;
}

CheckReport verify_cobar(std::uint64_t seed, int trials) {
    CheckReport rep;
    rep.suite = "cobar";

    auto prim = h0_primitives(3);
    rep.add("degree-zero-primitives",
            prim.size() == 1 && prim[0] == RElem::constant(1));

    RElem u2 = RElem::u_pow(2);
    CobarElem want(1);
    {
        NumPoly n;
        n.add(1, 1);
        n.add(2, 2);
        want.add_term(2, TensorH::from_helem(HElem(0, n)));
    }
    rep.add("right-unit-u2", eta_R(u2) == want);

    std::vector<RElem> rs;
    std::vector<CobarElem> gammas;
    Rng grng(derive_seed(seed, 0));
    for (int i = 0; i < std::min(trials, 40); ++i) {
        rs.push_back(rand_relem(grng, 3, 3, 9));
        gammas.push_back(random_cobar(grng, 1, 3, 3, 5, 2));
    }
    absorb(rep, algebroid_axioms_verify(rs, gammas));
    absorb(rep, cosimplicial_identities_verify(3, trials, derive_seed(seed, 1)));
    return rep;
}

CheckReport verify_fgl(std::uint64_t seed, int trials) {
    CheckReport rep;
    rep.suite = "fgl";

    rep.add("a11-is-u", mult_law(2).coeff(1, 1) == RElem::u_pow(1));
    absorb(rep, adams_a1jk_check(4));

    auto ml = mult_law(12);
    for (int i = 0; i < trials; ++i) {
        Rng rng(derive_seed(seed, i));
        int k = (int)rng.below(11), a = (int)rng.below(11), b = (int)rng.below(11);
        rep.add(trial_name("closed-form", i),
                power_coeff(ml, k, a, b) == mult_coeff_closed_form(k, a, b));

        int bi = (int)rng.below(9), bj = (int)rng.below(9);
        BetaVec prod = BetaVec::beta(bi) * BetaVec::beta(bj);
        BetaVec expect;
        for (int bk = 0; bk <= bi + bj; ++bk) {
            RElem c = mult_coeff_closed_form(bk, bi, bj);
            if (!c.is_zero()) expect.add(bk, c);
        }
        rep.add(trial_name("structure-constants", i), prod == expect);

        BetaVec x = rand_beta(rng, 5, 3);
        int stage = (int)rng.below(5);
        rep.add(trial_name("telescope-compatible", i),
                telescope_colimit_map(stage, x) ==
                    telescope_colimit_map(stage + 1, b_operator(x)));

        auto [scale, p] = beta_to_alpha(x);
        rep.add(trial_name("beta-roundtrip", i), alpha_to_beta(scale, p) == x);

        HElem h = rand_helem(rng, 3, 5, 3, 9);
        rep.add(trial_name("rational-sanity", i), h_from_laurent(to_laurent(h)) == h);
    }
    return rep;
}

std::vector<CheckReport> verify_suites(const std::string& which, std::uint64_t seed, int trials) {
    std::vector<CheckReport> out;
    bool all = which == "all";
    if (all || which == "numpoly") out.push_back(verify_numpoly(seed, trials));
    if (all || which == "hopf") out.push_back(verify_hopf(seed, trials));
    if (all || which == "modl") out.push_back(verify_modl(seed, trials));
    if (all || which == "cobar") out.push_back(verify_cobar(seed, trials));
    if (all || which == "fgl") out.push_back(verify_fgl(seed, trials));
    if (out.empty()) throw error("SizeGuard", "unknown suite: " + which);
    return out;
}

} // namespace binocobar
