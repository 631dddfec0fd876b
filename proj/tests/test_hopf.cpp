#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "binocobar/hopf.hpp"
#include "binocobar/rng.hpp"

using namespace binocobar;

namespace {

NumPoly rand_poly(Rng& rng, int max_idx, int max_terms, int max_c) {
    NumPoly p;
    int k = 1 + (int)rng.below(max_terms);
    for (int s = 0; s < k; ++s) p.add((int)rng.below(max_idx + 1), (long)rng.range(-max_c, max_c));
    return p;
}

HElem rand_helem(Rng& rng, int max_shift, int max_idx, int max_terms, int max_c) {
    return HElem((int)rng.below(max_shift + 1), rand_poly(rng, max_idx, max_terms, max_c));
}

Rat binom2(const Rat& x) { return x * (x - 1) / 2; }

} // namespace

TEST_CASE("canonical forms minimize the shift") {
    // 2 t^{-1} alpha_2 + 1 collapses to alpha_1
    HElem sum = HElem(1, NumPoly::alpha(2).scaled(2)) + HElem::one();
    CHECK(sum == HElem(0, NumPoly::alpha(1)));

    CHECK(h_eq(HElem(1, NumPoly::alpha(1)), HElem(0, NumPoly::alpha(0))));
    CHECK_FALSE(h_eq(HElem(0, NumPoly::alpha(1)), HElem(0, NumPoly::alpha(2))));

    Rng rng(31);
    for (int s = 0; s < 300; ++s) {
        HElem h = rand_helem(rng, 3, 6, 3, 9);
        if (h.is_zero()) continue;
        LaurentPoly val = to_laurent(h);
        CHECK(is_numerical(val.shifted(h.shift())));
        if (h.shift() > 0) CHECK_FALSE(is_numerical(val.shifted(h.shift() - 1)));
    }
}

TEST_CASE("membership decision") {
    CHECK(h_from_laurent(LaurentPoly::monomial(-1, Rat(1))) == HElem::t_inv(1));

    LaurentPoly half_minus;
    half_minus.add(0, Rat(1, 2));
    half_minus.add(1, Rat(-1, 2));
    CHECK(h_from_laurent(half_minus) == HElem(1, -NumPoly::alpha(2)));

    CHECK_THROWS_AS(h_from_laurent(LaurentPoly::constant(Rat(1, 2))), error);

    const int dens[6] = {1, 2, 3, 4, 6, 8};
    Rng rng(37);
    for (int s = 0; s < 500; ++s) {
        LaurentPoly p;
        int terms = 1 + (int)rng.below(4);
        for (int i = 0; i < terms; ++i) {
            Rat c((long)rng.range(-9, 9), dens[rng.below(6)]);
            c.canonicalize();
            p.add((int)rng.range(-4, 6), c);
        }
        if (p.is_zero()) continue;
        bool member;
        try {
            HElem h = h_from_laurent(p);
            member = true;
            CHECK(to_laurent(h) == p);
        } catch (const error& e) {
            REQUIRE(e.kind() == "NotInH");
            member = false;
        }
        CHECK(evaluation_criterion(p, 50) == member);
    }
}

TEST_CASE("coproduct against evaluation grids") {
    for (int n = 0; n <= 6; ++n) {
        TensorH d = coproduct(HElem(0, NumPoly::alpha(n)));
        for (long x = 2; x <= 3; ++x)
            for (long y = 2; y <= 3; ++y) {
                Rat lhs = tensor_eval(d, {Rat(x), Rat(y)});
                Rat rhs = h_eval(HElem(0, NumPoly::alpha(n)), Rat(x * y));
                CHECK(lhs == rhs);
            }
    }
    // alpha_1 = t is grouplike
    TensorH d1 = coproduct(HElem(0, NumPoly::alpha(1)));
    TensorH want(2);
    want.add_term(1, {{0, NumPoly::alpha(1)}, {0, NumPoly::alpha(1)}});
    CHECK(d1 == want);
}

TEST_CASE("coproduct on shifted elements") {
    Rng rng(41);
    for (int s = 0; s < 60; ++s) {
        HElem h = rand_helem(rng, 2, 5, 3, 6);
        TensorH d = coproduct(h);
        for (long x = 2; x <= 3; ++x)
            for (long y = 2; y <= 3; ++y)
                CHECK(tensor_eval(d, {Rat(x), Rat(y)}) == h_eval(h, Rat(x * y)));
    }
}

TEST_CASE("counit") {
    CHECK(counit(HElem(0, NumPoly::alpha(0))) == 1);
    CHECK(counit(HElem(0, NumPoly::alpha(1))) == 1);
    for (int n = 2; n <= 8; ++n) CHECK(counit(HElem(0, NumPoly::alpha(n))) == 0);
    CHECK(counit(HElem::t_inv(3)) == 1);
    Rng rng(43);
    for (int s = 0; s < 100; ++s) {
        HElem h = rand_helem(rng, 2, 5, 3, 9);
        CHECK(counit(h) == h_eval(h, Rat(1)));
    }
}

TEST_CASE("antipode spot values and involution") {
    CHECK(antipode(HElem(0, NumPoly::alpha(1))) == HElem::t_inv(1));
    CHECK(antipode(HElem(0, NumPoly::alpha(2))) == HElem(3, -NumPoly::alpha(2)));
    for (long x : {2L, 3L, 6L}) {
        Rat v = h_eval(antipode(HElem(0, NumPoly::alpha(2))), Rat(x));
        CHECK(v == binom2(Rat(1, x)));
    }
    Rng rng(47);
    for (int s = 0; s < 200; ++s) {
        HElem h = rand_helem(rng, 2, 6, 3, 9);
        CHECK(antipode(antipode(h)) == h);
        // antipode inverts the variable pointwise
        for (long x : {2L, 5L}) CHECK(h_eval(antipode(h), Rat(x)) == h_eval(h, Rat(1, x)));
    }
}

TEST_CASE("hopf axiom suite") {
    std::vector<HElem> samples;
    for (int n = 0; n <= 10; ++n) samples.emplace_back(0, NumPoly::alpha(n));
    Rng rng(53);
    for (int s = 0; s < 40; ++s) samples.push_back(rand_helem(rng, 2, 6, 3, 9));
    CheckReport rep = hopf_axioms_verify(samples);
    if (!rep.pass())
        for (auto& c : rep.cases)
            if (!c.pass) MESSAGE(c.name << ": " << c.detail);
    CHECK(rep.pass());
}

TEST_CASE("tensor slot operations") {
    TensorH g(2);
    g.add_term(1, {{0, NumPoly::alpha(1)}, {0, NumPoly::alpha(1)}});

    TensorH eps1 = tensor_slot_apply(g, 1, SlotOp::Counit);
    CHECK(eps1 == TensorH::from_helem(HElem(0, NumPoly::alpha(1))));

    TensorH a0(2);
    a0.add_term(1, {{0, NumPoly::alpha(0)}, {0, NumPoly::alpha(0)}});
    CHECK(tensor_slot_apply(a0, 1, SlotOp::Coproduct) == TensorH::unit(3));

    CHECK_THROWS_AS(tensor_slot_apply(g, 3, SlotOp::Counit), error);
}

TEST_CASE("lambda operations stay in H") {
    for (int n = 0; n <= 6; ++n)
        for (int m = 0; m <= 3; ++m)
            for (int k = 0; k <= 4; ++k) {
                LaurentPoly p = to_laurent(HElem(m, NumPoly::alpha(n)));
                if (p.is_zero()) continue;
                LaurentPoly num = LaurentPoly::constant(Rat(1));
                Rat fact(1);
                for (int i = 0; i < k; ++i) {
                    num = laurent_mul(num, p - LaurentPoly::constant(Rat(i)));
                    fact *= (i + 1);
                }
                LaurentPoly lam = num.scaled(1 / fact);
                CHECK_NOTHROW(h_from_laurent(lam));
            }
}
