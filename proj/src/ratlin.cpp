#include "hkz/ratlin.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "hkz/error.hpp"

namespace hkz {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

// Index of the largest |a_kk| among the active indices, or npos if all zero.
std::size_t largest_diagonal(const RatMatrix& a, const std::vector<std::size_t>& active) {
  std::size_t best = active.size();
  Rational best_abs = 0;
  for (std::size_t k = 0; k < active.size(); ++k) {
    const Rational v = abs(a(active[k], active[k]));
    if (sgn(v) != 0 && v > best_abs) {
      best_abs = v;
      best = k;
    }
  }
  return best;
}

}  // namespace

std::string to_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_str(10);
}

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                         : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  Rational r(negative ? mpz_class(-n) : n, d);
  r.canonicalize();
  return r;
}

RatVector parse_rational_list(std::string_view csv) {
  RatVector out;
  if (csv.empty()) {
    throw Error(ErrorKind::ParseError, "empty coordinate list");
  }
  std::size_t start = 0;
  while (true) {
    const auto comma = csv.find(',', start);
    out.push_back(parse_rational(csv.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::DimensionMismatch, "dot product of vectors with different lengths");
  }
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
    }
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool RatMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

RatVector RatMatrix::row(std::size_t i) const {
  return RatVector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatVector RatMatrix::operator*(std::span<const Rational> x) const {
  if (x.size() != cols_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix-vector product shape mismatch");
  }
  RatVector y(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
  if (cols_ != other.rows_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  }
  RatMatrix p(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) p(i, j) += a * other(k, j);
    }
  return p;
}

RatVector solve_symmetric(const RatMatrix& gram, std::span<const Rational> rhs) {
  const std::size_t n = gram.rows();
  if (!gram.is_square() || rhs.size() != n) {
    throw Error(ErrorKind::DimensionMismatch, "solve_symmetric: shape mismatch");
  }
  // Augmented copy [G | b].
  RatMatrix a(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = gram(i, j);
    a(i, n) = rhs[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    Rational best = 0;
    for (std::size_t r = col; r < n; ++r) {
      const Rational v = abs(a(r, col));
      if (sgn(v) != 0 && v > best) {
        best = v;
        pivot = r;
      }
    }
    if (pivot == n) throw Error(ErrorKind::SingularMatrix, "matrix is singular");
    if (pivot != col)
      for (std::size_t j = col; j <= n; ++j) std::swap(a(pivot, j), a(col, j));
    const Rational p = a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(a(r, col)) == 0) continue;
      const Rational f = a(r, col) / p;
      for (std::size_t j = col; j <= n; ++j) a(r, j) -= f * a(col, j);
    }
  }
  RatVector x(n, Rational(0));
  for (std::size_t i = n; i-- > 0;) {
    Rational s = a(i, n);
    for (std::size_t j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
    x[i] = s / a(i, i);
  }
  return x;
}

Inertia inertia(const RatMatrix& gram) {
  if (!gram.is_square()) {
    throw Error(ErrorKind::DimensionMismatch, "inertia of a non-square matrix");
  }
  RatMatrix a = gram;
  std::vector<std::size_t> active(a.rows());
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;

  Inertia result;
  while (!active.empty()) {
    std::size_t k = largest_diagonal(a, active);
    if (k == active.size()) {
      // Zero diagonal: find a nonzero off-diagonal a_ij and replace e_i by
      // e_i + e_j, which makes the new a_ii = 2 a_ij.
      std::size_t bi = active.size();
      std::size_t bj = active.size();
      for (std::size_t x = 0; x < active.size() && bi == active.size(); ++x)
        for (std::size_t y = x + 1; y < active.size(); ++y)
          if (sgn(a(active[x], active[y])) != 0) {
            bi = x;
            bj = y;
            break;
          }
      if (bi == active.size()) {
        result.n_zero += active.size();
        break;
      }
      const std::size_t i = active[bi];
      const std::size_t j = active[bj];
      for (std::size_t c : active) a(i, c) += a(j, c);
      for (std::size_t r : active) a(r, i) += a(r, j);
      k = bi;
    }
    const std::size_t p = active[k];
    const Rational d = a(p, p);
    (sgn(d) > 0 ? result.n_plus : result.n_minus) += 1;
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(k));
    for (std::size_t r : active) {
      if (sgn(a(r, p)) == 0) continue;
      const Rational f = a(r, p) / d;
      for (std::size_t c : active) a(r, c) -= f * a(p, c);
    }
  }
  return result;
}

bool is_negative_definite(const RatMatrix& gram) {
  const Inertia in = inertia(gram);
  return in.n_plus == 0 && in.n_zero == 0;
}

std::size_t rank(std::span<const RatVector> vectors) {
  if (vectors.empty()) return 0;
  std::vector<RatVector> rows(vectors.begin(), vectors.end());
  const std::size_t cols = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != cols) throw Error(ErrorKind::DimensionMismatch, "rank: ragged vectors");
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && sgn(rows[pivot][c]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (sgn(rows[i][c]) == 0) continue;
      const Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

RatMatrix gram(const RatMatrix& form, std::span<const RatVector> vectors) {
  const std::size_t n = vectors.size();
  std::vector<RatVector> images;
  images.reserve(n);
  for (const auto& v : vectors) images.push_back(form * v);
  RatMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      g(i, j) = dot(vectors[i], images[j]);
      g(j, i) = g(i, j);
    }
  return g;
}

}  // namespace hkz
