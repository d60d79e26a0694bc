#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hkz/model.hpp"
#include "support/generators.hpp"
#include "support/util.hpp"

using namespace hkz;
using namespace hkz::testing;

namespace {

const char* kUModel = R"({"rank": 2, "gram": [["0","1"],["1","0"]],
  "primes": {"E": ["1","-1"]}, "kahler": ["1","2"]})";

std::vector<ErrorKind> kinds(const std::vector<Violation>& vs) {
  std::vector<ErrorKind> out;
  for (const auto& v : vs) out.push_back(v.kind);
  return out;
}

}  // namespace

TEST_CASE("load U-model") {
  const HKModel m = load_model(kUModel);
  CHECK(m.rank() == 2);
  const auto& e = m.prime("E");
  CHECK(m.square(e) == -2);
  CHECK(m.square(m.kahler()) == 4);
  CHECK(m.pair(m.kahler(), e) == 1);
}

TEST_CASE("load rejects a Kaehler class orthogonal to a prime") {
  const char* text = R"({"rank": 2, "gram": [["0","1"],["1","0"]],
    "primes": {"E": ["1","-1"]}, "kahler": ["1","1"]})";
  try {
    load_model(text);
    FAIL("expected KahlerViolation");
  } catch (const ModelValidationError& e) {
    CHECK(e.kind() == ErrorKind::KahlerViolation);
    REQUIRE(e.violations().size() == 1);
  }
}

TEST_CASE("load rejects a negative definite form and lists every violation") {
  const char* text = R"({"rank": 2, "gram": [["-2","0"],["0","-2"]],
    "primes": {}, "kahler": ["1","0"]})";
  try {
    load_model(text);
    FAIL("expected SignatureViolation");
  } catch (const ModelValidationError& e) {
    CHECK(e.kind() == ErrorKind::SignatureViolation);
    CHECK(kinds(e.violations()) == std::vector{ErrorKind::SignatureViolation, ErrorKind::KahlerViolation});
  }
}

TEST_CASE("parse errors") {
  auto kind_of = [](const char* text) {
    try {
      parse_model(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Usage;
  };
  CHECK(kind_of("{") == ErrorKind::ParseError);
  CHECK(kind_of(R"({"rank": 2})") == ErrorKind::ParseError);
  CHECK(kind_of(R"({"rank": 2, "gram": [["0","1"],["1","0"]], "primes": {}, "kahler": ["1"]})") ==
        ErrorKind::ParseError);
  CHECK(kind_of(R"({"rank": 2, "gram": [["0","1"],["2","0"]], "primes": {}, "kahler": ["1","1"]})") ==
        ErrorKind::ParseError);
  CHECK(kind_of(R"({"rank": 2, "gram": [[0,1],[1,0]], "primes": {}, "kahler": ["1","1"]})") ==
        ErrorKind::ParseError);
  CHECK(kind_of(R"({"rank": 2, "gram": [["0","1"],["1","0"]], "primes": {}, "kahler": ["1","1/0"]})") ==
        ErrorKind::ParseError);
}

TEST_CASE("validate_model") {
  CHECK(validate_model(catalog_model("U-basic")).empty());

  const QuadraticSpace u(mat({{"0", "1"}, {"1", "0"}}));
  const HKModel dup(u, {{"E1", cls("1,-1")}, {"E2", cls("1,-1")}}, cls("1,2"));
  CHECK(kinds(validate_model(dup)) == std::vector{ErrorKind::DuplicatePrime});

  const QuadraticSpace diag(mat({{"1", "0", "0"}, {"0", "-1", "0"}, {"0", "0", "-1"}}));
  // q(E1, E2) = 1 - 2 = -1 < 0 while q(omega, E_i) = 2 > 0.
  const HKModel neg(diag, {{"E1", cls("1,1,0")}, {"E2", cls("1,2,0")}}, cls("2,0,0"));
  const auto vs = validate_model(neg);
  CHECK(kinds(vs) == std::vector{ErrorKind::PrimePairingViolation});
  CHECK(vs.front().detail.find("E1, E2") != std::string::npos);

  const HKModel zero(u, {{"Z", cls("0,0")}}, cls("1,1"));
  CHECK(kinds(validate_model(zero)) == std::vector{ErrorKind::ZeroPrime, ErrorKind::KahlerViolation});
}

TEST_CASE("repeated prime names are rejected") {
  const QuadraticSpace u(mat({{"0", "1"}, {"1", "0"}}));
  CHECK_THROWS_AS(HKModel(u, {{"E", cls("1,-1")}, {"E", cls("2,-1")}}, cls("1,2")), Error);
  CHECK_THROWS_AS(HKModel(u, {{"E", cls("1,-1,0")}}, cls("1,2")), Error);
}

TEST_CASE("catalog") {
  for (const auto& name : catalog_names()) {
    const HKModel m = catalog_model(name);
    CHECK(validate_model(m).empty());
    CHECK(inertia(m.space().gram()) == Inertia{1, 0, m.rank() - 1});
  }
  const HKModel basic = catalog_model("U-basic");
  REQUIRE(basic.primes().size() == 1);
  CHECK(basic.square(basic.primes()[0].cls) == -2);

  const HKModel chain = catalog_model("U-neg2-chain");
  std::vector<DivisorClass> ps;
  for (const auto& p : chain.primes()) ps.push_back(p.cls);
  CHECK(gram(chain.space(), ps) == mat({{"-2", "1"}, {"1", "-2"}}));

  CHECK(catalog_model("no-primes").primes().empty());
  try {
    catalog_model("nonexistent");
    FAIL("expected UnknownCatalogName");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownCatalogName);
  }
}

TEST_CASE("serialization is canonical") {
  const char* text = R"({"rank": 2, "gram": [["0","2/2"],["1","0"]],
    "primes": {"b": ["2/2","-1"], "a": ["0","1"]}, "kahler": ["1","2"]})";
  const std::string s = serialize_model(load_model(text));
  CHECK(s ==
        R"({"rank":2,"gram":[["0","1"],["1","0"]],"primes":{"a":["0","1"],"b":["1","-1"]},"kahler":["1","2"]})");
}

TEST_CASE("property: serialize round trip") {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const HKModel m = random_model(rng);
    CHECK(validate_model(m).empty());
    const std::string s = serialize_model(m);
    const HKModel back = load_model(s);
    CHECK(back == m);
    CHECK(serialize_model(back) == s);
  }
}

TEST_CASE("effective expressions") {
  const HKModel m = catalog_model("U-neg2-chain");
  EffectiveExpression x;
  x.coefficients["E1"] = 1;
  x.coefficients["E2"] = Rational(1, 2);
  x.positive_part = cls("2,2,1");
  CHECK(x.to_class(m) == cls("5/2,5/2,2"));
  CHECK_NOTHROW(check_effective(m, x));
  x.coefficients["E2"] = -1;
  CHECK_THROWS_AS(check_effective(m, x), Error);
  x.coefficients["E2"] = 1;
  x.positive_part = cls("0,0,1");  // q = -2
  CHECK_THROWS_AS(check_effective(m, x), Error);
  x.positive_part.reset();
  x.coefficients["nope"] = 1;
  CHECK_THROWS_AS(check_effective(m, x), Error);
}
