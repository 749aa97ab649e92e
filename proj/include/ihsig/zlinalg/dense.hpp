#pragma once

#include <optional>
#include <vector>

#include "ihsig/errors.hpp"
#include "ihsig/zlinalg/scalar.hpp"

namespace ihsig {

// Small dense rational matrices: pairing matrices, Gram matrices, forms.
struct DenseMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Rational> data;  // row-major

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, Rational(0)) {}

  Rational& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  bool square() const { return rows == cols; }

  DenseMatrix transpose() const {
    DenseMatrix t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool integral() const {
    for (const auto& x : data)
      if (x.get_den() != 1) return false;
    return true;
  }

  bool operator==(const DenseMatrix& o) const {
    return rows == o.rows && cols == o.cols && data == o.data;
  }
};

inline Rational determinant(DenseMatrix a) {
  if (!a.square()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = a.rows;
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) continue;
      Rational f = a(r, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

// Unique solution of A x = b for square invertible A, nullopt otherwise.
inline std::optional<std::vector<Rational>> solve_dense(DenseMatrix a, std::vector<Rational> b) {
  if (!a.square() || b.size() != a.rows)
    throw DimensionMismatch("solve_dense needs a square system");
  const std::size_t n = a.rows;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      std::swap(b[p], b[c]);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      Rational f = a(r, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
      b[r] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a(i, i);
  return b;
}

struct Inertia {
  std::size_t positive = 0, negative = 0, zero = 0;
  long long signature() const {
    return static_cast<long long>(positive) - static_cast<long long>(negative);
  }
};

// Congruence diagonalization over Q.  A zero diagonal with a nonzero entry
// in its row is repaired by adding a suitable row/column first.
inline Inertia symmetric_inertia(DenseMatrix a) {
  if (!a.square()) throw DimensionMismatch("a form needs a square matrix");
  if (!(a == a.transpose())) throw AsymmetricPairing("matrix is not symmetric");
  const std::size_t n = a.rows;
  Inertia out;
  auto add_row_col = [&](std::size_t dst, std::size_t src, const Rational& f) {
    for (std::size_t j = 0; j < n; ++j) a(dst, j) += f * a(src, j);
    for (std::size_t i = 0; i < n; ++i) a(i, dst) += f * a(i, src);
  };
  for (std::size_t c = 0; c < n; ++c) {
    if (a(c, c) == 0) {
      std::size_t p = c + 1;
      while (p < n && a(p, p) == 0) ++p;
      if (p < n) {
        for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(a(i, p), a(i, c));
      } else {
        std::size_t q = c + 1;
        while (q < n && a(c, q) == 0) ++q;
        if (q == n) {
          ++out.zero;
          continue;
        }
        add_row_col(c, q, 1);  // a(c,c) becomes 2 a(c,q) since a(q,q) = 0
      }
    }
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) continue;
      add_row_col(r, c, -a(r, c) / a(c, c));
    }
    (a(c, c) > 0 ? out.positive : out.negative)++;
  }
  return out;
}

}  // namespace ihsig
