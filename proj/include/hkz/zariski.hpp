#pragma once

#include <map>
#include <string>
#include <vector>

#include "hkz/model.hpp"

namespace hkz {

enum class DiagnosticKind { IncompleteModelSuspected };

std::string_view to_string(DiagnosticKind kind);

struct Diagnostic {
  DiagnosticKind kind;
  std::string detail;
  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

/// D = P + N with N = sum_E coeffs[E] E.
///
/// After canonicalization every stored coefficient is strictly positive, so
/// the keys of `negative` are exactly the support of N.
struct Decomposition {
  DivisorClass positive;
  std::map<std::string, Rational> negative;
  int rounds = 0;
  std::vector<Diagnostic> diagnostics;

  std::vector<std::string> support() const;
  DivisorClass negative_class(const HKModel& model) const;
  bool clean() const noexcept { return diagnostics.empty(); }

  /// Equality of (P, N); rounds and diagnostics are ignored.
  bool same_parts(const Decomposition& other) const {
    return positive == other.positive && negative == other.negative;
  }
};

/// Zariski q-decomposition by iterated orthogonal projection.
///
/// Each round collects every prime pairing negatively with the current
/// class, adds them to the accumulated support, and re-solves
/// q(D - sum x_E E, E') = 0 on the whole support. Stops once no prime pairs
/// negatively. Errors:
///   SupportNotNegativeDefinite, NegativeCoefficient, SingularSupportGram
/// all mean the input is outside PE_model (or the model is invalid).
Decomposition decompose(const HKModel& model, const DivisorClass& divisor);

/// Same as decompose, additionally recording D_1, D_2, ... (the class after
/// each round's subtraction).
Decomposition decompose(const HKModel& model, const DivisorClass& divisor,
                        std::vector<DivisorClass>& intermediates);

inline constexpr std::size_t kMaxBruteforcePrimes = 20;

/// All distinct canonical decompositions obtained from subsets S of primes
/// with negative definite Gram, nonnegative orthogonality solution and
/// q(P, E) >= 0 for every prime. For valid models this has at most one entry.
/// Throws Error(TooManyPrimes) above kMaxBruteforcePrimes.
std::vector<Decomposition> enumerate_decompositions(const HKModel& model, const DivisorClass& divisor);

/// Exhaustive oracle. Throws Error(NoValidSubset) or
/// Error(MultipleDistinctDecompositions).
Decomposition decompose_bruteforce(const HKModel& model, const DivisorClass& divisor);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<Check> checks;
  /// q(P) >= 0 and q(P, omega) >= 0; informational only.
  std::vector<Check> diagnostics;

  bool passed() const;
};

VerifyReport verify(const HKModel& model, const DivisorClass& divisor, const Decomposition& dec);

/// True iff candidate >= N_D coefficient-wise. The candidate must be a pure
/// prime combination with D - candidate in the dual cone; otherwise
/// Error(PreconditionFailed).
bool minimality_check(const HKModel& model, const DivisorClass& divisor, const Decomposition& dec,
                      const EffectiveExpression& candidate);

}  // namespace hkz
