#pragma once

#include "hkz/zariski.hpp"

namespace hkz {

/// D-dimension regime read off the positive part P of D = P + N.
///   Maximal        q(P) > 0, kappa(X, D) = dim X
///   Zero           P = 0, D is supported on a negative definite configuration
///   NullCandidate  P != 0, q(P) = 0; a Lagrangian-fibration candidate class
///   Indeterminate  q(P) < 0, only possible with a truncated prime list
enum class Regime { Zero, NullCandidate, Maximal, Indeterminate };

std::string_view to_string(Regime regime);

struct ClassReport {
  Regime regime;
  Rational q_positive;
  Decomposition decomposition;
};

ClassReport d_dimension_class(const HKModel& model, const DivisorClass& divisor);

}  // namespace hkz
