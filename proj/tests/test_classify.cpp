#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hkz/classify.hpp"
#include "support/generators.hpp"
#include "support/util.hpp"

using namespace hkz;
using namespace hkz::testing;

TEST_CASE("classification examples") {
  const HKModel chain = catalog_model("U-neg2-chain");
  const ClassReport big = d_dimension_class(chain, cls("5/2,5/2,2"));
  CHECK(big.regime == Regime::Maximal);
  CHECK(big.q_positive == 6);
  CHECK(big.decomposition.positive == cls("2,2,1"));

  const HKModel basic = catalog_model("U-basic");
  const ClassReport zero = d_dimension_class(basic, basic.prime("E"));
  CHECK(zero.regime == Regime::Zero);
  CHECK(zero.q_positive == 0);
  CHECK(zero.decomposition.positive.is_zero());

  const ClassReport null = d_dimension_class(basic, cls("0,1"));
  CHECK(null.regime == Regime::NullCandidate);
  CHECK(null.q_positive == 0);
  CHECK(null.decomposition.negative.empty());

  CHECK(d_dimension_class(basic, basic.kahler()).regime == Regime::Maximal);
  CHECK(to_string(Regime::NullCandidate) == "NullCandidate");
}

TEST_CASE("Indeterminate regime on a model with a missing prime") {
  // U + <-2> listing only E1 = (0,1,1). The class (0,1,-1) has square -2 but
  // is not a listed prime, so its positive part stays negative.
  const HKModel m(QuadraticSpace(mat({{"0", "1", "0"}, {"1", "0", "0"}, {"0", "0", "-2"}})),
                  {{"E1", cls("0,1,1")}}, cls("1,2,0"));
  REQUIRE(validate_model(m).empty());
  const ClassReport r = d_dimension_class(m, cls("0,1,-1"));
  CHECK(r.regime == Regime::Indeterminate);
  CHECK(sgn(r.q_positive) < 0);
  CHECK_FALSE(r.decomposition.clean());
}

TEST_CASE("property: regime is scale invariant and Zero means D = N") {
  Rng rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const HKModel m = random_model(rng, 5, 6);
    const PseudoEffective d = random_pseudo_effective(rng, m);
    const ClassReport base = d_dimension_class(m, d.cls);
    const Rational t = rng.positive_rational(7, 3);
    const ClassReport scaled = d_dimension_class(m, t * d.cls);
    CHECK(scaled.regime == base.regime);
    CHECK(scaled.q_positive == t * t * base.q_positive);
    if (base.regime == Regime::Zero) CHECK(base.decomposition.negative_class(m) == d.cls);
    if (d.cls.is_zero()) CHECK(base.regime == Regime::Zero);
  }
}
