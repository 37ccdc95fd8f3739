#pragma once

#include "qss/certifier.hpp"
#include "qss/quantum_operator.hpp"
#include "qss/schubert.hpp"

#include <json.hpp>

#include <map>
#include <string>

namespace qss::report {

using Json = nlohmann::ordered_json;

/// {"num": "p", "den": "q"}; strings keep arbitrary precision.
Json toJson(const Rational& q);
Rational rationalFromJson(const Json& j);

Json toJson(const OracleReport& r);
OracleReport oracleFromJson(const Json& j);

Json toJson(const Certificate& c);
/// Inverse of toJson; throws nlohmann::json::exception or
/// std::invalid_argument on malformed input.
Certificate certificateFromJson(const Json& j);

/// Entries as {"constant": ..., "linear": ...}; symbolic coefficients are
/// rendered as polynomial strings, numeric ones as "p/q".
Json toJson(const OperatorMatrix& m);

std::string renderText(const Certificate& c);
std::string renderText(const OracleReport& r);

/// n,degrees,r,d,e,delta,l0,det_linear_coeff,verdict
std::string csvHeader();
/// Rationals as "num/den" (integers as "num"); degrees semicolon separated.
std::string csvRow(const Certificate& c);

}  // namespace qss::report
