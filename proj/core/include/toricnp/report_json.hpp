#pragma once

// JSON forms of the library's reports. Keys keep insertion order so output is
// byte-stable; rationals are [num, den] pairs and cyclotomic integers are
// arrays of decimal strings (zeta^0 upward).

#include "toricnp/cyclo.hpp"
#include "toricnp/geometry.hpp"
#include "toricnp/oracle.hpp"
#include "toricnp/polygon.hpp"
#include "toricnp/rational.hpp"
#include "toricnp/slope_comb.hpp"

#include <nlohmann/json.hpp>

namespace toricnp::json {

using Json = nlohmann::ordered_json;

Json to_json(const mpz_class& z);  // number when it fits in 64 bits, else a string
Json to_json(const Rational& r);
Json to_json(const cyclo::CycInt& x);
Json to_json(const PolygonData& poly);
Json to_json(const geometry::HodgeData& hodge);
Json to_json(const slopes::PredictionReport& report);
Json to_json(const slopes::Assumption14Report& report);
Json to_json(const slopes::Assumption16Result& result);
Json to_json(const oracle::OracleReport& report);

}  // namespace toricnp::json
