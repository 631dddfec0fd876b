#pragma once
#include <string>

#include "json.hpp"

#include "binocobar/expr.hpp"
#include "binocobar/report.hpp"

namespace binocobar {

using Json = nlohmann::json;

/* Serialization keeps keys sorted (std::map underneath) so identical
 * inputs produce byte-identical documents. Integers within the 53-bit
 * interoperability window are emitted as numbers, larger ones as decimal
 * strings; non-integer rationals as "p/q". */
Json json_of_int(const Int& v);
Json json_of_rat(const Rat& v);

Json json_of_numpoly(const NumPoly& p);     // {"basis":"binomial","terms":{...}}
Json json_of_laurent(const LaurentPoly& p); // {"basis":"monomial","terms":{...}}
Json json_of_relem(const RElem& r);         // {"terms":{u-exponent: coeff}}
Json json_of_helem(const HElem& h);         // {"shift":j,"terms":{...}}
Json json_of_tensor(const TensorH& t);      // {"shifts":[...],"coeffs":{"i,j":c}}
Json json_of_cobar(const CobarElem& x);     // {"degree":n,"terms":{uexp:tensor}}
Json json_of_beta(const BetaVec& x);        // {"terms":{n:{u-exponent:coeff}}}
Json json_of_value(const Value& v);
Json json_of_report(const CheckReport& r);
Json json_of_error(const error& e); // {"error":kind,"detail":...,"position"?}

// Unicode renderings for --pretty.
std::string pretty_numpoly(const NumPoly& p);
std::string pretty_helem(const HElem& h);
std::string pretty_relem(const RElem& r);
std::string pretty_tensor(const TensorH& t);
std::string pretty_cobar(const CobarElem& x);
std::string pretty_beta(const BetaVec& x);
std::string pretty_value(const Value& v);

} // namespace binocobar
