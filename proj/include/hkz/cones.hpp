#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hkz/model.hpp"

namespace hkz {

/// One defining inequality of a cone, with its exact left-hand side.
struct ConeCondition {
  std::string name;  // e.g. "q(L, omega) > 0"
  Rational value;
};

struct ConeVerdict {
  bool member = false;
  std::vector<ConeCondition> failed_conditions;
};

/// q(L) > 0 and q(L, omega) > 0.
ConeVerdict in_positive_cone(const HKModel& model, const DivisorClass& cls);
/// q(L) >= 0 and q(L, omega) >= 0.
ConeVerdict in_closed_positive_cone(const HKModel& model, const DivisorClass& cls);
/// Closed positive cone and q(L, E) >= 0 for every model prime: the model of
/// the closed birational Kaehler cone.
ConeVerdict in_dual_bk_cone(const HKModel& model, const DivisorClass& cls);

enum class NullPairKind { Parallel, NegativeSquare };

std::string_view to_string(NullPairKind kind);

struct NullPairResult {
  NullPairKind kind;
  /// D = factor * L when Parallel.
  std::optional<Rational> factor;
  Rational square;  // q(D)
};

/// For 0 != L in the closed positive cone and q(L, D) = 0: either D is a
/// multiple of L (and q(D) = 0) or q(D) < 0. When a witness is supplied it
/// must be a valid EffectiveExpression whose class is D.
/// Throws Error(PreconditionFailed) or Error(InternalConsistencyFailure).
NullPairResult null_pair_classify(const HKModel& model, const DivisorClass& l, const DivisorClass& d,
                                  const std::optional<EffectiveExpression>& witness = std::nullopt);

enum class Extremality { Extremal, NotExtremal };

std::string_view to_string(Extremality e);

struct ExtremalityResult {
  Extremality verdict = Extremality::Extremal;
  /// When NotExtremal: lambda >= 0 with sum lambda_i g_i = L and some
  /// lambda_j > 0 on a generator g_j that is not a multiple of L.
  RatVector witness;
};

/// Decides whether the ray through L is extremal in cone(generators).
/// Throws Error(PreconditionFailed) for L = 0, Error(NotInCone) when L is
/// not a nonnegative combination, Error(DimensionMismatch) on ragged input.
ExtremalityResult extremal_ray_test(const std::vector<DivisorClass>& generators, const DivisorClass& l);

/// Effective representative of a non-extremal null class in the dual cone:
/// given L = D + G with D, G pseudo-effective and not proportional to L,
/// returns M = (N_D + N_G) / (1 - b - g), a nonnegative prime combination
/// with class exactly L, where P_D = b L and P_G = g L.
EffectiveExpression effective_null_representative(const HKModel& model, const DivisorClass& l,
                                                  const EffectiveExpression& d_expr,
                                                  const EffectiveExpression& g_expr);

}  // namespace hkz
