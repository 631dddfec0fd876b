#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "binocobar/jsonio.hpp"
#include "binocobar/modl.hpp"
#include "binocobar/verify.hpp"

using namespace binocobar;

namespace {

std::uint64_t default_seed() {
    const char* env = std::getenv("BINOMIAL_COBAR_SEED");
    if (!env || !*env) return 0;
    std::string s(env);
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != s.size())
        throw error("SizeGuard", "BINOMIAL_COBAR_SEED is not an unsigned integer: " + s);
    return v;
}

EvalCtx context_named(const std::string& name, int degree) {
    if (name == "F") return EvalCtx::f();
    if (name == "H") return EvalCtx::h();
    if (name == "beta") return EvalCtx::beta();
    if (degree < 0 || degree > 6)
        throw error("SizeGuard", "cosimplicial degree must be in [0,6]");
    return EvalCtx::cobar(degree);
}

void emit(const Json& doc) { std::cout << doc.dump() << "\n"; }

void emit_value(const Value& v, bool pretty) {
    if (pretty)
        std::cout << pretty_value(v) << "\n";
    else
        emit(json_of_value(v));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic in the binomial-coefficient ring, its localization, "
                 "and the associated cosimplicial algebra"};
    app.require_subcommand(1);
    app.fallthrough();
    bool pretty = false;
    app.add_flag("--pretty", pretty, "unicode rendering instead of JSON");

    int rc = 0;

    // mul LHS RHS [--ctx F|H|beta|cobar --n N]
    std::string mul_lhs, mul_rhs, mul_ctx = "F";
    int mul_degree = 1;
    auto* mul = app.add_subcommand("mul", "multiply two expressions");
    mul->add_option("lhs", mul_lhs, "left factor")->required();
    mul->add_option("rhs", mul_rhs, "right factor")->required();
    mul->add_option("--ctx", mul_ctx, "evaluation context")
        ->check(CLI::IsMember({"F", "H", "beta", "cobar"}));
    mul->add_option("--n", mul_degree, "cosimplicial degree for --ctx cobar");
    mul->callback([&] {
        EvalCtx ctx = context_named(mul_ctx, mul_degree);
        Value a = eval_expr(parse_expr(mul_lhs), ctx);
        Value b = eval_expr(parse_expr(mul_rhs), ctx);
        Value prod;
        switch (ctx.kind) {
            case EvalCtx::Kind::F:
                prod = alpha_mul(std::get<NumPoly>(a), std::get<NumPoly>(b));
                break;
            case EvalCtx::Kind::H: prod = std::get<HElem>(a) * std::get<HElem>(b); break;
            case EvalCtx::Kind::Cobar:
                prod = std::get<CobarElem>(a) * std::get<CobarElem>(b);
                break;
            case EvalCtx::Kind::Beta: prod = std::get<BetaVec>(a) * std::get<BetaVec>(b); break;
        }
        emit_value(prod, pretty);
    });

    // coproduct EXPR
    std::string cop_src;
    auto* cop = app.add_subcommand("coproduct", "comultiplication of an element of H");
    cop->add_option("expr", cop_src)->required();
    cop->callback([&] {
        TensorH t = coproduct(std::get<HElem>(eval_expr(parse_expr(cop_src), EvalCtx::h())));
        if (pretty)
            std::cout << pretty_tensor(t) << "\n";
        else
            emit(json_of_tensor(t));
    });

    // antipode EXPR
    std::string ant_src;
    auto* ant = app.add_subcommand("antipode", "conjugation of an element of H");
    ant->add_option("expr", ant_src)->required();
    ant->callback([&] {
        HElem h = antipode(std::get<HElem>(eval_expr(parse_expr(ant_src), EvalCtx::h())));
        if (pretty)
            std::cout << pretty_helem(h) << "\n";
        else
            emit(json_of_helem(h));
    });

    // counit EXPR
    std::string cou_src;
    auto* cou = app.add_subcommand("counit", "counit of an element of H");
    cou->add_option("expr", cou_src)->required();
    cou->callback([&] {
        Int v = counit(std::get<HElem>(eval_expr(parse_expr(cou_src), EvalCtx::h())));
        if (pretty)
            std::cout << v.get_str() << "\n";
        else
            emit(json_of_int(v));
    });

    // expand --basis binomial|monomial EXPR
    std::string exp_src, exp_basis;
    auto* exp = app.add_subcommand("expand", "rewrite an element of H in a chosen basis");
    exp->add_option("expr", exp_src)->required();
    exp->add_option("--basis", exp_basis, "target basis")
        ->required()
        ->check(CLI::IsMember({"binomial", "monomial"}));
    exp->callback([&] {
        HElem h = std::get<HElem>(eval_expr(parse_expr(exp_src), EvalCtx::h()));
        if (exp_basis == "monomial") {
            if (pretty)
                std::cout << pretty_helem(h) << "\n";
            else
                emit(json_of_laurent(to_laurent(h)));
            return;
        }
        if (pretty)
            std::cout << pretty_helem(h) << "\n";
        else if (h.shift() == 0)
            emit(json_of_numpoly(h.num()));
        else
            emit(json_of_helem(h));
    });

    // modl basis|lemma
    auto* modl = app.add_subcommand("modl", "basis and localization checks modulo ell^nu");
    modl->require_subcommand(1);
    int mb_l = 2, mb_nu = 1, ml_k = 0;
    auto* mbasis = modl->add_subcommand("basis", "stable-image basis of multiplication by t");
    mbasis->add_option("--l", mb_l, "prime")->required();
    mbasis->add_option("--nu", mb_nu, "prime-power exponent")->required();
    mbasis->callback([&] {
        CheckReport rep = hq_basis_check(mb_l, mb_nu);
        Int q = 1;
        for (int s = 0; s < mb_nu; ++s) q *= mb_l;
        Json basis = Json::array();
        for (Int i = 1; i < q; ++i)
            if (i % mb_l != 0) basis.push_back(json_of_int(i));
        emit(Json{{"q", json_of_int(q)}, {"basis", basis}, {"pass", rep.pass()}});
        if (!rep.pass()) rc = 1;
    });
    auto* mlemma = modl->add_subcommand("lemma", "unit determinant of the shifted block");
    mlemma->add_option("--l", mb_l, "prime")->required();
    mlemma->add_option("--nu", mb_nu, "prime-power exponent")->required();
    mlemma->add_option("--k", ml_k, "block index");
    mlemma->callback([&] {
        CheckReport rep = lemma_Mb_check(mb_l, mb_nu, ml_k);
        emit(Json{{"l", mb_l}, {"nu", mb_nu}, {"k", ml_k}, {"pass", rep.pass()}});
        if (!rep.pass()) rc = 1;
    });

    // cobar face|degen|diff --i I --n N EXPR
    auto* cob = app.add_subcommand("cobar", "cosimplicial structure maps");
    cob->require_subcommand(1);
    std::string cob_src;
    int cob_i = 0, cob_n = 1;
    auto add_cobar_sub = [&](const char* name, const char* help, bool needs_i) {
        auto* sub = cob->add_subcommand(name, help);
        sub->add_option("expr", cob_src)->required();
        if (needs_i) sub->add_option("--i", cob_i, "map index")->required();
        sub->add_option("--n", cob_n, "cosimplicial degree of the argument")->required();
        return sub;
    };
    add_cobar_sub("face", "coface map", true)->callback([&] {
        auto x = std::get<CobarElem>(eval_expr(parse_expr(cob_src), context_named("cobar", cob_n)));
        emit_value(coface(cob_i, x), pretty);
    });
    add_cobar_sub("degen", "codegeneracy map", true)->callback([&] {
        auto x = std::get<CobarElem>(eval_expr(parse_expr(cob_src), context_named("cobar", cob_n)));
        emit_value(codegeneracy(cob_i, x), pretty);
    });
    add_cobar_sub("diff", "alternating-sum differential", false)->callback([&] {
        auto x = std::get<CobarElem>(eval_expr(parse_expr(cob_src), context_named("cobar", cob_n)));
        emit_value(cobar_differential(x), pretty);
    });

    // fgl coeff --k K --i I --j J [--generic D]
    auto* fgl = app.add_subcommand("fgl", "formal group law coefficients");
    fgl->require_subcommand(1);
    int fg_k = 0, fg_i = 0, fg_j = 0, fg_D = 0;
    auto* fco = fgl->add_subcommand("coeff", "coefficient of x^i y^j in the k-th power");
    fco->add_option("--k", fg_k)->required();
    fco->add_option("--i", fg_i)->required();
    fco->add_option("--j", fg_j)->required();
    fco->add_option("--generic", fg_D, "use the generic symbolic law truncated at D");
    fco->callback([&] {
        if (fg_k < 0 || fg_k > 64 || fg_i < 0 || fg_i > 64 || fg_j < 0 || fg_j > 64)
            throw error("SizeGuard", "indices must lie in [0,64]");
        if (fco->count("--generic")) {
            MultiPoly c = power_coeff(generic_law(fg_D), fg_k, fg_i, fg_j);
            if (pretty)
                std::cout << c.str() << "\n";
            else
                emit(Json{{"law", "generic"},
                          {"D", fg_D},
                          {"k", fg_k},
                          {"i", fg_i},
                          {"j", fg_j},
                          {"coeff", c.str()}});
        } else {
            RElem c = power_coeff(mult_law(2), fg_k, fg_i, fg_j);
            if (pretty)
                std::cout << pretty_relem(c) << "\n";
            else
                emit(Json{{"law", "multiplicative"},
                          {"k", fg_k},
                          {"i", fg_i},
                          {"j", fg_j},
                          {"coeff", json_of_relem(c)["terms"]}});
        }
    });

    // telescope --stage J EXPR
    std::string tel_src;
    int tel_stage = 0;
    auto* tel = app.add_subcommand("telescope", "image of a beta-expression at a telescope stage");
    tel->add_option("expr", tel_src)->required();
    tel->add_option("--stage", tel_stage, "telescope stage")->required();
    tel->callback([&] {
        auto x = std::get<BetaVec>(eval_expr(parse_expr(tel_src), EvalCtx::beta()));
        emit_value(telescope_colimit_map(tel_stage, x), pretty);
    });

    // verify [SUITE] --seed S --trials T
    std::string ver_suite = "all";
    std::uint64_t ver_seed = 0;
    int ver_trials = 100;
    auto* ver = app.add_subcommand("verify", "seeded property suites");
    ver->add_option("suite", ver_suite, "all|numpoly|hopf|modl|cobar|fgl")
        ->check(CLI::IsMember({"all", "numpoly", "hopf", "modl", "cobar", "fgl"}));
    ver->add_option("--seed", ver_seed, "master seed");
    ver->add_option("--trials", ver_trials, "trials per property")->check(CLI::Range(1, 100000));
    ver->callback([&] {
        if (!ver->count("--seed")) ver_seed = default_seed();
        auto reports = verify_suites(ver_suite, ver_seed, ver_trials);
        Json suites = Json::array();
        bool pass = true;
        for (auto& r : reports) {
            suites.push_back(json_of_report(r));
            pass = pass && r.pass();
        }
        emit(Json{{"seed", ver_seed}, {"trials", ver_trials}, {"pass", pass}, {"suites", suites}});
        if (!pass) rc = 1;
    });

    std::function<void(CLI::App*)> allow_global_flags = [&](CLI::App* a) {
        for (auto* s : a->get_subcommands([](CLI::App*) { return true; })) {
            s->fallthrough();
            allow_global_flags(s);
        }
    };
    allow_global_flags(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        emit(Json{{"error", "UsageError"}, {"detail", e.what()}});
        return 2;
    } catch (const error& e) {
        emit(json_of_error(e));
        return 2;
    }
    return rc;
}
