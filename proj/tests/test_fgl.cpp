#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "binocobar/fgl.hpp"
#include "binocobar/numpoly.hpp"

using namespace binocobar;

namespace {

RElem ru(int a) { return RElem::u_pow(a); }
RElem rc(long c) { return RElem::constant(c); }

BetaVec random_beta(Rng& rng, int max_idx, int max_terms) {
    BetaVec x;
    int terms = 1 + (int)rng.below(max_terms);
    for (int s = 0; s < terms; ++s) {
        RElem c;
        c.add((int)rng.range(-2, 3), (long)rng.range(-9, 9));
        x.add((int)rng.below(max_idx + 1), c);
    }
    return x;
}

HElem random_target(Rng& rng) {
    NumPoly p;
    int terms = 1 + (int)rng.below(5);
    for (int s = 0; s < terms; ++s) p.add((int)rng.below(6), (long)rng.range(-9, 9));
    return HElem((int)rng.below(4), p);
}

} // namespace

TEST_CASE("law containers") {
    FglLaw<RElem> m = mult_law(3);
    CHECK(m.exact());
    CHECK(m.symmetric());
    CHECK(m.coeff(1, 1) == ru(1));
    CHECK(m.coeff(1, 2).is_zero());
    CHECK(m.coeffs().size() == 1);

    FglLaw<MultiPoly> g = generic_law(3);
    CHECK_FALSE(g.exact());
    CHECK(g.coeffs().size() == 2); // a(1,1) and a(1,2)
    CHECK(g.coeff(1, 1) == MultiPoly::sym("a(1,1)"));
    CHECK(g.coeff(2, 1) == MultiPoly::sym("a(1,2)"));
    CHECK(g.coeff(1, 2) == g.coeff(2, 1));

    CHECK(fgl_symbol(2, 1) == "a(1,2)");
    CHECK(fgl_symbol(1, 2) == "a(1,2)");
    CHECK_THROWS_AS(mult_law(1), error);
}

TEST_CASE("closed form") {
    CHECK(mult_coeff_closed_form(3, 2, 2) == ru(1).scaled(6));
    CHECK(mult_coeff_closed_form(2, 1, 1) == rc(2));
    CHECK(mult_coeff_closed_form(2, 1, 2) == ru(1).scaled(2));
    CHECK(mult_coeff_closed_form(1, 2, 2).is_zero());
    CHECK(mult_coeff_closed_form(1, 1, 0) == rc(1));
    CHECK(mult_coeff_closed_form(0, 0, 0) == rc(1));
    CHECK(mult_coeff_closed_form(0, 1, 0).is_zero());
}

TEST_CASE("power expansion matches the closed form") {
    FglLaw<RElem> m = mult_law(2);
    for (int k = 0; k <= 8; ++k)
        for (int i = 0; i <= 8; ++i)
            for (int j = 0; j <= 8; ++j)
                CHECK(power_coeff(m, k, i, j) == mult_coeff_closed_form(k, i, j));
}

TEST_CASE("power expansion of the generic law") {
    FglLaw<MultiPoly> g = generic_law(4);
    CHECK(power_coeff(g, 1, 1, 1) == MultiPoly::sym("a(1,1)"));
    CHECK(power_coeff(g, 2, 1, 1) == MultiPoly::constant(2));
    CHECK(power_coeff(g, 1, 1, 0) == MultiPoly::one());
    // x^2y^2 in mu^2 collects a11*xy twice and each linear-times-a12 cross
    MultiPoly a11 = MultiPoly::sym("a(1,1)");
    MultiPoly a12 = MultiPoly::sym("a(1,2)");
    CHECK(power_coeff(g, 2, 2, 2) == a11 * a11 + a12.scaled(4));
}

TEST_CASE("truncation refusal") {
    FglLaw<MultiPoly> g = generic_law(3);
    CHECK_THROWS_WITH_AS(power_coeff(g, 2, 3, 3), doctest::Contains("coefficients past"),
                         error);
    CHECK_NOTHROW(power_coeff(g, 5, 3, 3));
    // exact laws expand to any degree
    CHECK(power_coeff(mult_law(2), 3, 5, 5).is_zero() ==
          mult_coeff_closed_form(3, 5, 5).is_zero());
    CHECK_THROWS_AS(b_matrix_entry(7, 1, generic_law(3)), error);
}

TEST_CASE("beta structure constants transport the binomial ones") {
    FglLaw<RElem> m = mult_law(2);
    for (int i = 0; i <= 10; ++i)
        for (int j = 0; j <= 10; ++j) {
            NumPoly prod = alpha_mul(NumPoly::alpha(i), NumPoly::alpha(j));
            for (int k = 0; k <= i + j + 1; ++k) {
                RElem want;
                Int c = prod.coeff(k);
                if (c != 0) want.add(i + j - k, c);
                CHECK(power_coeff(m, k, i, j) == want);
            }
        }
}

TEST_CASE("adams relation") {
    for (int D = 2; D <= 6; ++D) {
        CheckReport rep = adams_a1jk_check(D);
        if (!rep.pass())
            for (auto& c : rep.cases)
                if (!c.pass) MESSAGE(c.name << ": " << c.detail);
        CHECK(rep.pass());
    }
    // the relation read off directly on the multiplicative law
    CHECK(power_coeff(mult_law(2), 2, 1, 2) == ru(1).scaled(2));
    FglLaw<MultiPoly> g = generic_law(5);
    for (int k = 1; k <= 4; ++k) {
        CHECK(power_coeff(g, k, 1, k - 1) == MultiPoly::constant(k));
        if (k >= 2) CHECK(power_coeff(g, k, 1, k - 2).is_zero());
    }
    CHECK_THROWS_AS(adams_a1jk_check(1), error);
    CHECK_THROWS_AS(adams_a1jk_check(9), error);
}

TEST_CASE("beta products") {
    BetaVec b1 = BetaVec::beta(1);
    BetaVec want = BetaVec::beta(1).scaled(ru(1)) + BetaVec::beta(2).scaled(rc(2));
    CHECK(b1 * b1 == want);
    CHECK(BetaVec::beta(0) * b1 == b1);

    Rng rng(107);
    FglLaw<RElem> m = mult_law(2);
    for (int s = 0; s < 200; ++s) {
        int i = (int)rng.below(7), j = (int)rng.below(7);
        BetaVec prod = BetaVec::beta(i) * BetaVec::beta(j);
        BetaVec direct;
        for (int k = 0; k <= i + j; ++k) direct.add(k, power_coeff(m, k, i, j));
        CHECK(prod == direct);
    }
}

TEST_CASE("b operator") {
    CHECK(b_operator(BetaVec::beta(0)) == BetaVec::beta(1));
    BetaVec want = BetaVec::beta(2).scaled(ru(1).scaled(2)) + BetaVec::beta(3).scaled(rc(3));
    CHECK(b_operator(BetaVec::beta(2)) == want);
    CHECK(b_operator(BetaVec()).is_zero());

    FglLaw<RElem> m = mult_law(2);
    CHECK(b_matrix_entry(2, 2, m) == ru(1).scaled(2));
    CHECK(b_matrix_entry(2, 3, m) == rc(3));
    CHECK(b_matrix_entry(2, 4, m).is_zero());
    CHECK(b_matrix_entry(2, 0, m).is_zero());
    for (int j = 0; j <= 6; ++j) {
        BetaVec img = b_operator(BetaVec::beta(j));
        for (int k = 0; k <= 8; ++k) {
            RElem got;
            auto it = img.terms().find(k);
            if (it != img.terms().end()) got = it->second;
            CHECK(got == b_matrix_entry(j, k, m));
        }
    }
}

TEST_CASE("beta to alpha ledger") {
    auto [s0, p0] = beta_to_alpha(BetaVec::beta(2));
    CHECK(s0 == ru(2));
    RNumPoly a2;
    a2.add(2, rc(1));
    CHECK(p0 == a2);

    auto [s1, p1] = beta_to_alpha(BetaVec::beta(0));
    CHECK(s1 == rc(1));

    BetaVec mix = BetaVec::beta(1).scaled(ru(1)) + BetaVec::beta(2);
    auto [s2, p2] = beta_to_alpha(mix);
    CHECK(s2 == ru(2));
    RNumPoly w2;
    w2.add(1, rc(1));
    w2.add(2, rc(1));
    CHECK(p2 == w2);
    CHECK(alpha_to_beta(s2, p2) == mix);

    Rng rng(109);
    for (int s = 0; s < 200; ++s) {
        BetaVec x = random_beta(rng, 6, 3);
        auto [sc, p] = beta_to_alpha(x);
        CHECK(alpha_to_beta(sc, p) == x);
        if (!x.is_zero()) CHECK(sc.terms().size() == 1);
    }
}

TEST_CASE("telescope classes") {
    CobarElem u2a2 = CobarElem::monomial(2, TensorH::from_helem(HElem(0, NumPoly::alpha(2))));
    CHECK(telescope_colimit_map(0, BetaVec::beta(2)) == u2a2);

    CobarElem unit = CobarElem::monomial(0, TensorH::unit(1));
    CHECK(telescope_colimit_map(1, BetaVec::beta(1)) == unit);
    CHECK(telescope_colimit_map(1, b_operator(BetaVec::beta(0))) ==
          telescope_colimit_map(0, BetaVec::beta(0)));

    Rng rng(113);
    for (int s = 0; s < 200; ++s) {
        BetaVec x = random_beta(rng, 5, 3);
        int j = (int)rng.below(5);
        CHECK(telescope_colimit_map(j, x) == telescope_colimit_map(j + 1, b_operator(x)));
    }
}

TEST_CASE("telescope hits every normal form") {
    Rng rng(127);
    for (int s = 0; s < 200; ++s) {
        HElem h = random_target(rng);
        auto [stage, x] = telescope_preimage(h);
        CHECK(telescope_colimit_map(stage, x) ==
              CobarElem::monomial(0, TensorH::from_helem(h)));
    }
    auto [st, bv] = telescope_preimage(HElem::t_inv(1));
    CHECK(st == 1);
    CHECK(telescope_colimit_map(st, bv) ==
          CobarElem::monomial(0, TensorH::from_helem(HElem::t_inv(1))));
}

TEST_CASE("rational base change") {
    Rng rng(131);
    for (int s = 0; s < 200; ++s) {
        HElem h = random_target(rng);
        CHECK(h_from_laurent(to_laurent(h)) == h);
    }
}
