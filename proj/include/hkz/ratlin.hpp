#pragma once

// Exact rational linear algebra. Nothing in here touches floating point:
// every sign decision downstream (q(x, y) < 0 versus = 0) must be exact.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace hkz {

using Rational = mpq_class;
using RatVector = std::vector<Rational>;

/// Canonical text form: "p" or "p/q" in lowest terms with q > 0.
std::string to_string(const Rational& value);

/// Accepts "p" or "p/q" with optional leading '-' and q > 0. Lowest terms
/// are not required on input. Throws Error(ParseError).
Rational parse_rational(std::string_view text);

/// Comma-separated rationals, no whitespace: "5/2,5/2,2".
RatVector parse_rational_list(std::string_view csv);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// Dense row-major matrix of big rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  /// Throws Error(DimensionMismatch) on ragged input.
  static RatMatrix from_rows(const std::vector<RatVector>& rows);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_symmetric() const;

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  RatVector row(std::size_t i) const;
  RatMatrix transpose() const;
  RatVector operator*(std::span<const Rational> x) const;
  RatMatrix operator*(const RatMatrix& other) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct Inertia {
  std::size_t n_plus = 0;
  std::size_t n_zero = 0;
  std::size_t n_minus = 0;

  std::size_t dimension() const noexcept { return n_plus + n_zero + n_minus; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Solves G x = b exactly by Gaussian elimination with pivoting on the
/// largest absolute value. Throws Error(SingularMatrix) when G is not
/// invertible and Error(DimensionMismatch) on shape errors.
RatVector solve_symmetric(const RatMatrix& gram, std::span<const Rational> rhs);

/// Sylvester inertia by symmetric congruence (Lagrange diagonalization).
Inertia inertia(const RatMatrix& gram);

/// inertia(G) == (0, 0, n). The 0x0 matrix is negative definite.
bool is_negative_definite(const RatMatrix& gram);

/// Rank of the span of the given vectors.
std::size_t rank(std::span<const RatVector> vectors);

/// Gram matrix (v_i^T B v_j) of vectors under the symmetric bilinear form B.
RatMatrix gram(const RatMatrix& form, std::span<const RatVector> vectors);

}  // namespace hkz
