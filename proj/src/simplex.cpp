#include "hkz/simplex.hpp"

#include "hkz/error.hpp"

namespace hkz {

std::optional<RatVector> find_nonnegative_solution(const RatMatrix& a, std::span<const Rational> b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m) throw Error(ErrorKind::DimensionMismatch, "simplex: rhs length differs from rows");

  // Tableau over columns [x_0..x_{n-1} | artificials a_0..a_{m-1} | rhs].
  const std::size_t width = n + m + 1;
  const std::size_t rhs = n + m;
  RatMatrix t(m, width);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const int sign = sgn(b[i]) < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t(i, j) = sign * a(i, j);
    t(i, n + i) = 1;
    t(i, rhs) = sign * b[i];
    basis[i] = n + i;
  }
  // Reduced costs of min sum(artificials): -sum of rows on original columns.
  RatVector cost(width, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) cost[j] -= t(i, j);
  for (std::size_t i = 0; i < m; ++i) cost[rhs] -= t(i, rhs);

  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < rhs; ++j)
      if (sgn(cost[j]) < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;

    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t(i, enter)) <= 0) continue;
      const Rational ratio = t(i, rhs) / t(i, enter);
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    // Phase one is bounded below by zero, so an entering column always has
    // a positive entry.
    if (leave == m) throw Error(ErrorKind::InternalConsistencyFailure, "simplex: unbounded phase one");

    const Rational pivot = t(leave, enter);
    for (std::size_t j = 0; j < width; ++j) t(leave, j) /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || sgn(t(i, enter)) == 0) continue;
      const Rational f = t(i, enter);
      for (std::size_t j = 0; j < width; ++j) t(i, j) -= f * t(leave, j);
    }
    if (sgn(cost[enter]) != 0) {
      const Rational f = cost[enter];
      for (std::size_t j = 0; j < width; ++j) cost[j] -= f * t(leave, j);
    }
    basis[leave] = enter;
  }

  // cost[rhs] holds -(sum of artificials).
  if (sgn(cost[rhs]) != 0) return std::nullopt;
  RatVector x(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = t(i, rhs);
  return x;
}

}  // namespace hkz
