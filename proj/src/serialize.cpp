#include "hkz/serialize.hpp"

namespace hkz {

namespace {

Rational rational_from(const Json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) throw Error(ErrorKind::ParseError, "rationals must be JSON strings");
  return parse_rational(v.get<std::string>());
}

DivisorClass class_from(const Json& v) {
  if (!v.is_array()) throw Error(ErrorKind::ParseError, "a class must be an array of rationals");
  RatVector out;
  for (const auto& x : v) out.push_back(rational_from(x));
  return DivisorClass(std::move(out));
}

Json checks_json(const std::vector<Check>& checks) {
  Json a = Json::array();
  for (const auto& c : checks) a.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return a;
}

}  // namespace

Json to_json(const Rational& value) { return to_string(value); }

Json to_json(const DivisorClass& cls) {
  Json a = Json::array();
  for (const auto& x : cls.coords()) a.push_back(to_string(x));
  return a;
}

Json to_json(const Decomposition& dec) {
  Json n = Json::object();
  for (const auto& [name, c] : dec.negative) n[name] = to_string(c);
  Json diags = Json::array();
  for (const auto& d : dec.diagnostics) diags.push_back(Json{{"kind", to_string(d.kind)}, {"detail", d.detail}});
  Json doc;
  doc["P"] = to_json(dec.positive);
  doc["N"] = std::move(n);
  doc["rounds"] = dec.rounds;
  doc["diagnostics"] = std::move(diags);
  return doc;
}

Json to_json(const VerifyReport& report) {
  Json doc;
  doc["passed"] = report.passed();
  doc["checks"] = checks_json(report.checks);
  doc["diagnostics"] = checks_json(report.diagnostics);
  return doc;
}

Json to_json(const ConeVerdict& verdict) {
  Json failed = Json::array();
  for (const auto& c : verdict.failed_conditions)
    failed.push_back(Json{{"condition", c.name}, {"value", to_string(c.value)}});
  Json doc;
  doc["member"] = verdict.member;
  doc["failed_conditions"] = std::move(failed);
  return doc;
}

Json to_json(const NullPairResult& result) {
  Json doc;
  doc["kind"] = to_string(result.kind);
  if (result.factor) doc["factor"] = to_string(*result.factor);
  doc["qD"] = to_string(result.square);
  return doc;
}

Json to_json(const ExtremalityResult& result) {
  Json doc;
  doc["verdict"] = to_string(result.verdict);
  if (result.verdict == Extremality::NotExtremal) {
    Json w = Json::array();
    for (const auto& x : result.witness) w.push_back(to_string(x));
    doc["witness"] = std::move(w);
  }
  return doc;
}

Json to_json(const ClassReport& report) {
  Json doc;
  doc["regime"] = to_string(report.regime);
  doc["qP"] = to_string(report.q_positive);
  doc["decomposition"] = to_json(report.decomposition);
  return doc;
}

Json to_json(const EffectiveExpression& expr) {
  Json c = Json::object();
  for (const auto& [name, v] : expr.coefficients) c[name] = to_string(v);
  Json doc;
  doc["coefficients"] = std::move(c);
  if (expr.positive_part) doc["positive_part"] = to_json(*expr.positive_part);
  return doc;
}

Json to_json(const std::vector<Violation>& violations) {
  Json a = Json::array();
  for (const auto& v : violations) a.push_back(Json{{"kind", to_string(v.kind)}, {"detail", v.detail}});
  return a;
}

Json error_json(std::string_view kind, std::string_view detail) {
  return Json{{"error", kind}, {"detail", detail}};
}

Decomposition decomposition_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("P") || !doc.contains("N"))
    throw Error(ErrorKind::ParseError, "decomposition needs \"P\" and \"N\"");
  Decomposition dec;
  dec.positive = class_from(doc["P"]);
  if (!doc["N"].is_object()) throw Error(ErrorKind::ParseError, "\"N\" must be an object");
  for (const auto& [name, v] : doc["N"].items()) dec.negative[name] = rational_from(v);
  if (doc.contains("rounds")) {
    if (!doc["rounds"].is_number_integer()) throw Error(ErrorKind::ParseError, "\"rounds\" must be an integer");
    dec.rounds = doc["rounds"].get<int>();
  }
  return dec;
}

std::vector<DivisorClass> generators_from_json(const Json& doc) {
  if (!doc.is_array()) throw Error(ErrorKind::ParseError, "generators must be a JSON array of classes");
  std::vector<DivisorClass> out;
  for (const auto& g : doc) out.push_back(class_from(g));
  return out;
}

}  // namespace hkz
