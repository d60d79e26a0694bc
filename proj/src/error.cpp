#include "hkz/error.hpp"

namespace hkz {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Usage: return "Usage";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::SignatureViolation: return "SignatureViolation";
    case ErrorKind::PrimePairingViolation: return "PrimePairingViolation";
    case ErrorKind::KahlerViolation: return "KahlerViolation";
    case ErrorKind::DuplicatePrime: return "DuplicatePrime";
    case ErrorKind::ZeroPrime: return "ZeroPrime";
    case ErrorKind::UnknownCatalogName: return "UnknownCatalogName";
    case ErrorKind::UnknownPrime: return "UnknownPrime";
    case ErrorKind::SupportNotNegativeDefinite: return "SupportNotNegativeDefinite";
    case ErrorKind::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorKind::SingularSupportGram: return "SingularSupportGram";
    case ErrorKind::NoValidSubset: return "NoValidSubset";
    case ErrorKind::MultipleDistinctDecompositions: return "MultipleDistinctDecompositions";
    case ErrorKind::TooManyPrimes: return "TooManyPrimes";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::NotInCone: return "NotInCone";
    case ErrorKind::ProportionalityContradiction: return "ProportionalityContradiction";
    case ErrorKind::InternalConsistencyFailure: return "InternalConsistencyFailure";
  }
  return "Unknown";
}

}  // namespace hkz
