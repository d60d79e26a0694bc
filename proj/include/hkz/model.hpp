#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hkz/error.hpp"
#include "hkz/ratlin.hpp"

namespace hkz {

/// A class in NS(X) (x) Q, written in the fixed lattice basis.
class DivisorClass {
 public:
  DivisorClass() = default;
  explicit DivisorClass(RatVector coords) : coords_(std::move(coords)) {}
  static DivisorClass zero(std::size_t rank) { return DivisorClass(RatVector(rank, Rational(0))); }

  std::size_t rank() const noexcept { return coords_.size(); }
  const RatVector& coords() const noexcept { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  bool is_zero() const;

  /// Some rational c with *this == c * other, if one exists. other != 0.
  std::optional<Rational> multiple_of(const DivisorClass& other) const;

  DivisorClass& operator+=(const DivisorClass& rhs);
  DivisorClass& operator-=(const DivisorClass& rhs);
  DivisorClass& operator*=(const Rational& t);
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Rational& t, DivisorClass a) { return a *= t; }
  friend DivisorClass operator-(DivisorClass a) { return a *= Rational(-1); }
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

 private:
  RatVector coords_;
};

std::string to_string(const DivisorClass& cls);

/// (NS_Q, q): a rank-r rational space with symmetric Gram matrix. Signature
/// is checked by validate_model, not here, so that invalid inputs can still
/// be reported on.
class QuadraticSpace {
 public:
  QuadraticSpace() = default;
  /// Throws Error(DimensionMismatch) unless gram is square and symmetric.
  explicit QuadraticSpace(RatMatrix gram);

  std::size_t rank() const noexcept { return gram_.rows(); }
  const RatMatrix& gram() const noexcept { return gram_; }

  /// The bilinear form q(x, y).
  Rational pair(const DivisorClass& x, const DivisorClass& y) const;
  Rational square(const DivisorClass& x) const { return pair(x, x); }

  void check_class(const DivisorClass& x) const;

  friend bool operator==(const QuadraticSpace&, const QuadraticSpace&) = default;

 private:
  RatMatrix gram_;
};

/// (q(C_i, C_j))_{i,j}.
RatMatrix gram(const QuadraticSpace& space, std::span<const DivisorClass> classes);

struct NamedPrime {
  std::string name;
  DivisorClass cls;
  friend bool operator==(const NamedPrime&, const NamedPrime&) = default;
};

/// Finite model of a HyperKaehler manifold: the quadratic space, a finite
/// list of prime-divisor classes (kept sorted by name) and one Kaehler class.
class HKModel {
 public:
  HKModel() = default;
  /// Sorts primes by name. Throws Error(DuplicatePrime) on a repeated name
  /// and Error(DimensionMismatch) on a class of the wrong rank.
  HKModel(QuadraticSpace space, std::vector<NamedPrime> primes, DivisorClass kahler);

  const QuadraticSpace& space() const noexcept { return space_; }
  std::size_t rank() const noexcept { return space_.rank(); }
  const std::vector<NamedPrime>& primes() const noexcept { return primes_; }
  const DivisorClass& kahler() const noexcept { return kahler_; }

  /// Index into primes(), or nullopt.
  std::optional<std::size_t> find_prime(std::string_view name) const;
  const DivisorClass& prime(std::string_view name) const;

  Rational pair(const DivisorClass& x, const DivisorClass& y) const { return space_.pair(x, y); }
  Rational square(const DivisorClass& x) const { return space_.square(x); }

  friend bool operator==(const HKModel&, const HKModel&) = default;

 private:
  QuadraticSpace space_;
  std::vector<NamedPrime> primes_;
  DivisorClass kahler_;
};

/// Witness of membership in PE_model = cone(primes) + closed positive cone.
struct EffectiveExpression {
  std::map<std::string, Rational> coefficients;
  std::optional<DivisorClass> positive_part;

  /// The class sum_E c_E E + positive_part. Throws Error(UnknownPrime).
  DivisorClass to_class(const HKModel& model) const;
};

/// Checks the EffectiveExpression invariants (nonnegative coefficients,
/// known names, positive part in the closed positive cone).
/// Throws Error(PreconditionFailed).
void check_effective(const HKModel& model, const EffectiveExpression& expr);

struct Violation {
  ErrorKind kind;
  std::string detail;
};

/// Every violated HKModel invariant, one entry each. Empty iff valid.
std::vector<Violation> validate_model(const HKModel& model);

/// Parses the JSON model format without validating invariants.
/// Throws Error(ParseError) / Error(DuplicatePrime) / Error(DimensionMismatch).
HKModel parse_model(std::string_view json_text);

/// parse_model + validate_model; throws ModelValidationError listing every
/// violation if the model is invalid.
HKModel load_model(std::string_view json_text);
HKModel load_model_file(const std::string& path);

/// JSON text of the model in canonical form (rationals in lowest terms,
/// primes in name order).
std::string serialize_model(const HKModel& model);

class ModelValidationError : public Error {
 public:
  explicit ModelValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

std::vector<std::string> catalog_names();
/// Built-in models. Throws Error(UnknownCatalogName).
HKModel catalog_model(std::string_view name);

}  // namespace hkz
