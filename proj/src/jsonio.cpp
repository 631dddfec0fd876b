#include "binocobar/jsonio.hpp"

namespace binocobar {

namespace {

const Int kJsonIntMax = (Int(1) << 53) - 1;

std::string sub_digits(int n) {
    static const char* digits[10] = {"₀", "₁", "₂", "₃", "₄",
                                     "₅", "₆", "₇", "₈", "₉"};
    std::string out;
    for (char c : std::to_string(n))
        if (c >= '0' && c <= '9') out += digits[c - '0'];
    return out;
}

std::string sup_digits(int n) {
    static const char* digits[10] = {"⁰", "¹", "²", "³", "⁴",
                                     "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string out;
    if (n < 0) out += "⁻";
    for (char c : std::to_string(n))
        if (c >= '0' && c <= '9') out += digits[c - '0'];
    return out;
}

std::string alpha_str(int n) { return "α" + sub_digits(n); }

std::string u_str(int e) {
    if (e == 0) return "";
    if (e == 1) return "u";
    return "u" + sup_digits(e);
}

// Appends "c X" to a signed sum under construction, omitting unit
// coefficients when a symbol follows.
void join_term(std::string& out, const Int& c, const std::string& symbol) {
    Int a = c < 0 ? Int(-c) : c;
    if (out.empty())
        out += c < 0 ? "-" : "";
    else
        out += c < 0 ? " - " : " + ";
    if (a != 1 || symbol.empty()) out += a.get_str();
    out += symbol;
}

std::string factor_str(int shift, int index) {
    std::string s = shift ? "t" + sup_digits(-shift) : "";
    return s + alpha_str(index);
}

} // namespace

Json json_of_int(const Int& v) {
    if (v <= kJsonIntMax && v >= -kJsonIntMax) return Json(static_cast<std::int64_t>(v.get_si()));
    return Json(v.get_str());
}

Json json_of_rat(const Rat& v) {
    Rat c = v;
    c.canonicalize();
    if (c.get_den() == 1) return json_of_int(Int(c.get_num()));
    return Json(c.get_str());
}

Json json_of_numpoly(const NumPoly& p) {
    Json terms = Json::object();
    for (auto& [n, c] : p.terms()) terms[std::to_string(n)] = json_of_int(c);
    return Json{{"basis", "binomial"}, {"terms", terms}};
}

Json json_of_laurent(const LaurentPoly& p) {
    Json terms = Json::object();
    for (auto& [e, c] : p.terms()) terms[std::to_string(e)] = json_of_rat(c);
    return Json{{"basis", "monomial"}, {"terms", terms}};
}

Json json_of_relem(const RElem& r) {
    Json terms = Json::object();
    for (auto& [e, c] : r.terms()) terms[std::to_string(e)] = json_of_int(c);
    return Json{{"terms", terms}};
}

Json json_of_helem(const HElem& h) {
    Json terms = Json::object();
    for (auto& [n, c] : h.num().terms()) terms[std::to_string(n)] = json_of_int(c);
    return Json{{"shift", h.shift()}, {"terms", terms}};
}

Json json_of_tensor(const TensorH& t) {
    Json coeffs = Json::object();
    for (auto& [key, c] : t.coeffs()) {
        std::string k;
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (i) k += ",";
            k += std::to_string(key[i]);
        }
        coeffs[k] = json_of_int(c);
    }
    return Json{{"shifts", t.shifts()}, {"coeffs", coeffs}};
}

Json json_of_cobar(const CobarElem& x) {
    Json terms = Json::object();
    for (auto& [e, t] : x.terms()) terms[std::to_string(e)] = json_of_tensor(t);
    return Json{{"degree", x.degree()}, {"terms", terms}};
}

Json json_of_beta(const BetaVec& x) {
    Json terms = Json::object();
    for (auto& [n, c] : x.terms()) terms[std::to_string(n)] = json_of_relem(c)["terms"];
    return Json{{"terms", terms}};
}

Json json_of_value(const Value& v) {
    if (auto* p = std::get_if<NumPoly>(&v)) return json_of_numpoly(*p);
    if (auto* h = std::get_if<HElem>(&v)) return json_of_helem(*h);
    if (auto* c = std::get_if<CobarElem>(&v)) return json_of_cobar(*c);
    return json_of_beta(std::get<BetaVec>(v));
}

Json json_of_report(const CheckReport& r) {
    Json failed = Json::array();
    for (auto& c : r.cases)
        if (!c.pass) failed.push_back(Json{{"name", c.name}, {"detail", c.detail}});
    return Json{{"suite", r.suite},
                {"cases", r.cases.size()},
                {"failures", r.failures()},
                {"pass", r.pass()},
                {"failed", failed}};
}

Json json_of_error(const error& e) {
    Json out{{"error", e.kind()}, {"detail", e.what()}};
    if (auto* pe = dynamic_cast<const parse_error*>(&e)) out["position"] = pe->position();
    return out;
}

std::string pretty_numpoly(const NumPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto& [n, c] : p.terms()) join_term(out, c, alpha_str(n));
    return out;
}

std::string pretty_helem(const HElem& h) {
    if (h.shift() == 0) return pretty_numpoly(h.num());
    return "t" + sup_digits(-h.shift()) + "(" + pretty_numpoly(h.num()) + ")";
}

std::string pretty_relem(const RElem& r) {
    if (r.is_zero()) return "0";
    std::string out;
    for (auto& [e, c] : r.terms()) join_term(out, c, u_str(e));
    return out;
}

std::string pretty_tensor(const TensorH& t) {
    if (t.arity() == 0) return t.is_zero() ? "0" : t.as_scalar().get_str();
    if (t.is_zero()) return "0";
    std::string out;
    for (auto& [key, c] : t.coeffs()) {
        std::string sym;
        for (int i = 0; i < t.arity(); ++i) {
            if (i) sym += "⊗";
            sym += factor_str(t.shifts()[i], key[i]);
        }
        join_term(out, c, sym);
    }
    return out;
}

std::string pretty_cobar(const CobarElem& x) {
    if (x.is_zero()) return "0";
    if (x.degree() == 0) return pretty_relem(x.as_r());
    std::string out;
    for (auto& [e, t] : x.terms()) {
        if (!out.empty()) out += " + ";
        std::string up = u_str(e);
        if (!up.empty()) out += up + "·";
        out += "(" + pretty_tensor(t) + ")";
    }
    return out;
}

std::string pretty_beta(const BetaVec& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (auto& [n, c] : x.terms()) {
        std::string sym = "β" + sub_digits(n);
        if (c.terms().size() == 1) {
            auto& [e, v] = *c.terms().begin();
            join_term(out, v, u_str(e) + sym);
        } else {
            if (!out.empty()) out += " + ";
            out += "(" + pretty_relem(c) + ")·" + sym;
        }
    }
    return out;
}

std::string pretty_value(const Value& v) {
    if (auto* p = std::get_if<NumPoly>(&v)) return pretty_numpoly(*p);
    if (auto* h = std::get_if<HElem>(&v)) return pretty_helem(*h);
    if (auto* c = std::get_if<CobarElem>(&v)) return pretty_cobar(*c);
    return pretty_beta(std::get<BetaVec>(v));
}

} // namespace binocobar
