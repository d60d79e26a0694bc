#pragma once

// JSON forms of every report. Rationals are strings in lowest terms, keys
// appear in a fixed order and primes in name order, so dump() output is
// byte-deterministic.

#include <string_view>

#include "json.hpp"

#include "hkz/classify.hpp"
#include "hkz/cones.hpp"
#include "hkz/zariski.hpp"

namespace hkz {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& value);
Json to_json(const DivisorClass& cls);
Json to_json(const Decomposition& dec);
Json to_json(const VerifyReport& report);
Json to_json(const ConeVerdict& verdict);
Json to_json(const NullPairResult& result);
Json to_json(const ExtremalityResult& result);
Json to_json(const ClassReport& report);
Json to_json(const EffectiveExpression& expr);
Json to_json(const std::vector<Violation>& violations);
Json error_json(std::string_view kind, std::string_view detail);

/// Reads {"P": [...], "N": {...}} (rounds and diagnostics optional).
/// Throws Error(ParseError).
Decomposition decomposition_from_json(const Json& doc);

/// Reads [[...], [...]] as a generator list. Throws Error(ParseError).
std::vector<DivisorClass> generators_from_json(const Json& doc);

}  // namespace hkz
