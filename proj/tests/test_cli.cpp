#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "binocobar/cobar.hpp"
#include "binocobar/expr.hpp"
#include "binocobar/fgl.hpp"

using namespace binocobar;

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = "env -u BINOMIAL_COBAR_SEED " BINOCOBAR_CLI_PATH " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

RunResult run_cli_env(const std::string& envs, const std::string& args) {
    std::string cmd = "env " + envs + " " BINOCOBAR_CLI_PATH " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace

TEST_CASE("parser shapes") {
    ExprPtr e = parse_expr("a(1)*a(1)");
    CHECK(e->kind == Expr::Kind::Mul);
    CHECK(e->lhs->kind == Expr::Kind::Alpha);
    CHECK(e->lhs->value == 1);

    ExprPtr f = parse_expr("t^-1 * a(2) ox a(0)");
    CHECK(f->kind == Expr::Kind::Tensor);
    CHECK(f->lhs->kind == Expr::Kind::Mul);
    CHECK(f->lhs->lhs->kind == Expr::Kind::Pow);

    // precedence: ^ over *, * over +, ox loosest
    CHECK(*parse_expr("1+2*3^2") == *parse_expr("1+(2*(3^2))"));
    CHECK(*parse_expr("a(1) ox a(2)+a(3)") == *parse_expr("a(1) ox (a(2)+a(3))"));
    CHECK(*parse_expr("2^2^3") == *parse_expr("(2^2)^3"));
    CHECK(*parse_expr("1-2-3") == *parse_expr("(1-2)-3"));
    CHECK(*parse_expr("-t*u") == *parse_expr("-(t*u)"));
}

TEST_CASE("parse errors carry byte positions") {
    auto pos_of = [](const std::string& src) -> long {
        try {
            parse_expr(src);
        } catch (const parse_error& e) {
            return (long)e.position();
        }
        return -1;
    };
    CHECK(pos_of("a(") == 2);
    CHECK(pos_of("") == 0);
    CHECK(pos_of("a(1)+") == 5);
    CHECK(pos_of("(a(1)") == 5);
    CHECK(pos_of("t^x") == 2);
    CHECK(pos_of("a(1))") == 4);
    CHECK(pos_of("a(1.5)") == 3);
}

TEST_CASE("format and reparse agree on a corpus") {
    const char* corpus[] = {
        "0", "1", "-7", "t", "u", "a(0)", "a(12)", "b(3)",
        "t^2", "t^-1", "u^-3", "a(2)^4", "2^10",
        "t+t", "t-1", "1-t", "-t", "-(t+1)", "-t^2",
        "t*t*t", "2*a(1)", "a(1)*2", "t*(t+1)", "(t+1)*(t-1)",
        "a(1)+a(2)+a(3)", "a(1)-a(2)-a(3)", "a(1)*a(2)*a(3)",
        "t^-1*a(1)", "t^-2*(a(0)-a(1))", "(a(1)+a(2))^2",
        "u*b(1)+2*b(2)", "b(0)-b(1)", "(u+1)*b(2)", "u^-1*b(1)",
        "a(1) ox a(1)", "t ox t", "u ox a(2)", "1 ox a(1) ox a(2)",
        "u^2 ox (a(1)+2*a(2))", "(t^-1*a(2)) ox a(0)",
        "3*(a(1) ox a(1))", "u*(1 ox a(1))", "-(u ox a(2))",
        "(1+u)^3", "((t))", "-(-t)", "2*(0-3)", "t^-1^2",
        "a(1)*(a(2)+a(3))*a(4)", "u^-2*b(3)-b(1)", "t*t-t^2",
        "5", "t^0", "0*a(5)",
    };
    int count = 0;
    for (const char* src : corpus) {
        ExprPtr e = parse_expr(src);
        std::string printed = format_expr(e);
        ExprPtr back = parse_expr(printed);
        CHECK(*e == *back);
        ++count;
    }
    CHECK(count >= 50);
}

TEST_CASE("evaluation per context") {
    NumPoly p = std::get<NumPoly>(eval_expr(parse_expr("a(1)*a(1)"), EvalCtx::f()));
    NumPoly want = NumPoly::alpha(1) + NumPoly::alpha(2).scaled(2);
    CHECK(p == want);

    HElem h = std::get<HElem>(eval_expr(parse_expr("t^-1*a(1)"), EvalCtx::h()));
    CHECK(h == HElem(0, NumPoly::alpha(0)));

    CHECK(std::get<NumPoly>(eval_expr(parse_expr("t*t"), EvalCtx::f())) == want);

    BetaVec bv = std::get<BetaVec>(eval_expr(parse_expr("b(1)*b(1)"), EvalCtx::beta()));
    BetaVec bw = BetaVec::beta(1).scaled(RElem::u_pow(1)) + BetaVec::beta(2).scaled(RElem::constant(2));
    CHECK(bv == bw);

    CobarElem ce = std::get<CobarElem>(eval_expr(parse_expr("u ox a(1)"), EvalCtx::cobar(1)));
    CHECK(ce == eta_R(RElem::u_pow(1)));

    CobarElem zero = std::get<CobarElem>(eval_expr(parse_expr("0"), EvalCtx::cobar(2)));
    CHECK(zero.is_zero());
    CHECK(zero.degree() == 2);
}

TEST_CASE("context violations") {
    auto kind_of = [](const char* src, const EvalCtx& ctx) {
        try {
            eval_expr(parse_expr(src), ctx);
        } catch (const error& e) {
            return std::string(e.kind());
        }
        return std::string("none");
    };
    CHECK(kind_of("t^-1", EvalCtx::f()) == "ContextViolation");
    CHECK(kind_of("u", EvalCtx::f()) == "ContextViolation");
    CHECK(kind_of("u", EvalCtx::h()) == "ContextViolation");
    CHECK(kind_of("b(1)", EvalCtx::f()) == "ContextViolation");
    CHECK(kind_of("b(1)", EvalCtx::cobar(1)) == "ContextViolation");
    CHECK(kind_of("a(2)^-1", EvalCtx::h()) == "NegativeExponent");
    CHECK(kind_of("a(1)", EvalCtx::cobar(2)) == "ContextViolation");
    CHECK(kind_of("t ox t", EvalCtx::h()) == "ContextViolation");
    CHECK(kind_of("u+a(1)", EvalCtx::cobar(1)) == "ContextViolation");
    CHECK(kind_of("a(1)+t ox t", EvalCtx::cobar(2)) == "none");
    CHECK(kind_of("t^-1", EvalCtx::cobar(1)) == "none");
    CHECK(kind_of("u^-1", EvalCtx::beta()) == "none");
}

TEST_CASE("binary pinned outputs") {
    RunResult mul = run_cli("mul \"a(1)\" \"a(1)\"");
    CHECK(mul.code == 0);
    CHECK(mul.out == "{\"basis\":\"binomial\",\"terms\":{\"1\":1,\"2\":2}}\n");

    RunResult mb = run_cli("modl basis --l 2 --nu 2");
    CHECK(mb.code == 0);
    CHECK(mb.out == "{\"basis\":[1,3],\"pass\":true,\"q\":4}\n");

    RunResult ml = run_cli("modl lemma --l 3 --nu 1 --k 0");
    CHECK(ml.code == 0);
    CHECK(ml.out == "{\"k\":0,\"l\":3,\"nu\":1,\"pass\":true}\n");

    RunResult cop = run_cli("coproduct \"t\"");
    CHECK(cop.code == 0);
    CHECK(cop.out == "{\"coeffs\":{\"1,1\":1},\"shifts\":[0,0]}\n");

    RunResult cou = run_cli("counit \"a(0)\"");
    CHECK(cou.code == 0);
    CHECK(cou.out == "1\n");

    RunResult ant = run_cli("antipode \"a(2)\"");
    CHECK(ant.code == 0);
    CHECK(ant.out == "{\"shift\":3,\"terms\":{\"2\":-1}}\n");

    RunResult exm = run_cli("expand --basis monomial \"a(2)\"");
    CHECK(exm.code == 0);
    CHECK(exm.out == "{\"basis\":\"monomial\",\"terms\":{\"1\":\"-1/2\",\"2\":\"1/2\"}}\n");

    RunResult exb = run_cli("expand --basis binomial \"t*t\"");
    CHECK(exb.code == 0);
    CHECK(exb.out == "{\"basis\":\"binomial\",\"terms\":{\"1\":1,\"2\":2}}\n");

    RunResult cf = run_cli("cobar face --i 0 --n 0 \"u\"");
    CHECK(cf.code == 0);
    CHECK(cf.out == "{\"degree\":1,\"terms\":{\"1\":{\"coeffs\":{\"1\":1},\"shifts\":[0]}}}\n");

    RunResult cd = run_cli("cobar degen --i 0 --n 1 \"u ox a(1)\"");
    CHECK(cd.code == 0);
    CHECK(cd.out == "{\"degree\":0,\"terms\":{\"1\":{\"coeffs\":{\"\":1},\"shifts\":[]}}}\n");

    RunResult fc = run_cli("fgl coeff --k 3 --i 2 --j 2");
    CHECK(fc.code == 0);
    CHECK(fc.out == "{\"coeff\":{\"1\":6},\"i\":2,\"j\":2,\"k\":3,\"law\":\"multiplicative\"}\n");

    RunResult fg = run_cli("fgl coeff --k 2 --i 1 --j 1 --generic 4");
    CHECK(fg.code == 0);
    CHECK(fg.out == "{\"D\":4,\"coeff\":\"2\",\"i\":1,\"j\":1,\"k\":2,\"law\":\"generic\"}\n");

    RunResult tel = run_cli("telescope --stage 1 \"b(1)\"");
    CHECK(tel.code == 0);
    CHECK(tel.out == "{\"degree\":1,\"terms\":{\"0\":{\"coeffs\":{\"0\":1},\"shifts\":[0]}}}\n");
}

TEST_CASE("binary error paths") {
    RunResult bad = run_cli("mul \"a(\" \"a(0)\"");
    CHECK(bad.code == 2);
    CHECK(bad.out.find("\"error\":\"ParseError\"") != std::string::npos);
    CHECK(bad.out.find("\"position\":2") != std::string::npos);

    RunResult ctx = run_cli("mul \"u\" \"u\"");
    CHECK(ctx.code == 2);
    CHECK(ctx.out.find("ContextViolation") != std::string::npos);

    RunResult usage = run_cli("frobnicate");
    CHECK(usage.code == 2);
    CHECK(usage.out.find("UsageError") != std::string::npos);

    RunResult trunc = run_cli("fgl coeff --k 2 --i 3 --j 3 --generic 3");
    CHECK(trunc.code == 2);
    CHECK(trunc.out.find("TruncationExceeded") != std::string::npos);

    RunResult noarg = run_cli("mul \"a(1)\"");
    CHECK(noarg.code == 2);
}

TEST_CASE("binary seeding and determinism") {
    RunResult a = run_cli("verify numpoly --seed 5 --trials 5");
    CHECK(a.code == 0);
    RunResult b = run_cli("verify numpoly --seed 5 --trials 5");
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"pass\":true") != std::string::npos);
    CHECK(a.out.find("\"seed\":5") != std::string::npos);
    CHECK(a.out.find("\"trials\":5") != std::string::npos);

    RunResult c = run_cli("verify numpoly --seed 6 --trials 5");
    CHECK(c.code == 0);
    CHECK(a.out != c.out); // seed reaches the generators

    RunResult env = run_cli_env("BINOMIAL_COBAR_SEED=9", "verify numpoly --trials 2");
    CHECK(env.code == 0);
    CHECK(env.out.find("\"seed\":9") != std::string::npos);

    RunResult envo = run_cli_env("BINOMIAL_COBAR_SEED=9", "verify numpoly --seed 4 --trials 2");
    CHECK(envo.code == 0);
    CHECK(envo.out.find("\"seed\":4") != std::string::npos);

    RunResult envbad = run_cli_env("BINOMIAL_COBAR_SEED=ripe", "verify numpoly --trials 2");
    CHECK(envbad.code == 2);
}

TEST_CASE("binary pretty rendering") {
    RunResult pm = run_cli("mul \"a(1)\" \"a(1)\" --pretty");
    CHECK(pm.code == 0);
    CHECK(pm.out.find('{') == std::string::npos);
    CHECK(pm.out.find("α") != std::string::npos);

    RunResult ph = run_cli("--pretty antipode \"a(2)\"");
    CHECK(ph.code == 0);
    CHECK(ph.out.find("α₂") != std::string::npos);
    CHECK(ph.out.find("t⁻³") != std::string::npos);
}
