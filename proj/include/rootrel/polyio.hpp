#pragma once

// Polynomial text input and JSON encodings of results.
//
// Accepted text: comma-separated ascending coefficients ("1,0,-2,3/2"), or
// an expression in x ("x^6 - 2x^4 + 3/2*x - 1"). Rational coefficients are
// cleared to integers; the roots are unchanged.

#include <string>
#include <string_view>

#include "json.hpp"
#include "rootrel/circulant.hpp"
#include "rootrel/fastbasis.hpp"
#include "rootrel/oracle.hpp"
#include "rootrel/sampling.hpp"

namespace rootrel {

using nlohmann::json;

// Throws InvalidInput on malformed text or the zero polynomial.
IntPoly parse_polynomial(std::string_view text);
std::vector<RatScalar> parse_rational_list(std::string_view text);
RatScalar parse_rational(std::string_view text);

json integer_to_json(const Integer& x);
Integer integer_from_json(const json& j);

json basis_to_json(const LatticeBasis& b);
LatticeBasis basis_from_json(const json& j, std::size_t dimension);

json roots_to_json(const CanonicalOrder& order, int digits = 30);
json verdict_to_json(const RelationVerdict& v);
json basis_result_to_json(const BasisResult& r);
json stats_to_json(const SampleSpec& spec, const StatsReport& r);
json circulant_to_json(const FractalCirculant& F);
json oracle_to_json(const OracleReport& r, int bound, int digits);

}  // namespace rootrel
