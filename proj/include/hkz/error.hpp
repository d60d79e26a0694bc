#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hkz {

enum class ErrorKind {
  Usage,
  ParseError,
  DimensionMismatch,
  SingularMatrix,
  SignatureViolation,
  PrimePairingViolation,
  KahlerViolation,
  DuplicatePrime,
  ZeroPrime,
  UnknownCatalogName,
  UnknownPrime,
  SupportNotNegativeDefinite,
  NegativeCoefficient,
  SingularSupportGram,
  NoValidSubset,
  MultipleDistinctDecompositions,
  TooManyPrimes,
  PreconditionFailed,
  NotInCone,
  ProportionalityContradiction,
  InternalConsistencyFailure,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hkz
