#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "binocobar/jsonio.hpp"
#include "binocobar/multipoly.hpp"
#include "binocobar/rng.hpp"

using namespace binocobar;

TEST_CASE("splitmix64 stream is pinned") {
    Rng r(1);
    CHECK(r.next() == 10451216379200822465ull);
    CHECK(r.next() == 13757245211066428519ull);
    CHECK(r.next() == 17911839290282890590ull);
    CHECK(derive_seed(7, 0) == 6551058038977729289ull);
    CHECK(derive_seed(7, 1) == 15401519135024594858ull);
}

TEST_CASE("rng bounds") {
    Rng r(99);
    for (int i = 0; i < 1000; ++i) {
        auto b = r.below(7);
        CHECK(b < 7);
        auto v = r.range(-3, 3);
        CHECK(v >= -3);
        CHECK(v <= 3);
    }
    Rng a(5), b(5);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
}

TEST_CASE("laurent arithmetic") {
    LaurentPoly p = LaurentPoly::monomial(-1, Rat(1, 2)) + LaurentPoly::t();
    CHECK(p.coeff(-1) == Rat(1, 2));
    CHECK(p.lowest_exp() == -1);
    CHECK(p.highest_exp() == 1);
    LaurentPoly q = laurent_mul(p, LaurentPoly::t());
    CHECK(q.coeff(0) == Rat(1, 2));
    CHECK(q.coeff(2) == 1);
    CHECK(laurent_invert_t(q).coeff(-2) == 1);
    CHECK(laurent_eval(p, Rat(2)) == Rat(1, 4) + Rat(2));
    CHECK_THROWS_WITH_AS(laurent_eval(p, Rat(0)), doctest::Contains("pole"), error);
}

TEST_CASE("laurent zero handling") {
    LaurentPoly z;
    CHECK(z.is_zero());
    z.add(3, Rat(1));
    z.add(3, Rat(-1));
    CHECK(z.is_zero());
    CHECK(z.lowest_exp() == 0);
}

TEST_CASE("multipoly symbols") {
    MultiPoly a = MultiPoly::sym("a(1,1)");
    MultiPoly b = MultiPoly::sym("a(1,2)");
    CHECK((a * b).str() == "a(1,1)*a(1,2)");
    CHECK((a * a).str() == "a(1,1)^2");
    CHECK((a + b - a) == b);
    CHECK((a - a).is_zero());
    CHECK(a.scaled(3).str() == "3*a(1,1)");
    CHECK(MultiPoly::constant(2) * a == a + a);
}

TEST_CASE("error kinds carry through") {
    error e("NotInH", "nope");
    CHECK(e.kind() == "NotInH");
    parse_error p(4, "')'");
    CHECK(p.position() == 4);
    CHECK(p.kind() == "ParseError");
    context_violation c("u", "F");
    CHECK(c.kind() == "ContextViolation");
    CHECK(c.atom() == "u");
}

TEST_CASE("report aggregation") {
    CheckReport r;
    r.suite = "demo";
    r.add("one", true);
    CHECK(r.pass());
    r.add("two", false, "boom");
    CHECK_FALSE(r.pass());
    CHECK(r.failures() == 1);
}

TEST_CASE("json integers respect the 53-bit window") {
    CHECK(json_of_int(Int(0)).dump() == "0");
    Int edge = (Int(1) << 53) - 1;
    CHECK(json_of_int(edge).is_number());
    CHECK(json_of_int(edge + 1).is_string());
    CHECK(json_of_int(-(edge + 1)).get<std::string>() == Int(-(edge + 1)).get_str());
    CHECK(json_of_rat(Rat(7, 1)).dump() == "7");
    CHECK(json_of_rat(Rat(-3, 6)).get<std::string>() == "-1/2");
}
