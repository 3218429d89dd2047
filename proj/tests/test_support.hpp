#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "sll/linalg.hpp"
#include "sll/subspace.hpp"

namespace sll::test {

inline Vector vec(std::initializer_list<long> xs, Field f = Field::rationals()) {
  Vector v;
  for (long x : xs) v.emplace_back(f, x);
  return v;
}

inline Matrix mat(std::initializer_list<std::initializer_list<long>> rows, Field f = Field::rationals()) {
  std::vector<Vector> rs;
  std::size_t cols = 0;
  for (auto r : rows) {
    rs.push_back(vec(r, f));
    cols = r.size();
  }
  return Matrix::from_rows(f, cols, rs);
}

inline Subspace span(std::size_t n, std::initializer_list<std::initializer_list<long>> rows,
                     Field f = Field::rationals()) {
  std::vector<Vector> rs;
  for (auto r : rows) rs.push_back(vec(r, f));
  return Subspace::span(f, n, rs);
}

/// Small-integer random matrix; deterministic for a given engine state.
inline Matrix random_matrix(std::mt19937_64& rng, Field f, std::size_t rows, std::size_t cols,
                            long range = 3, int zero_bias = 2) {
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (rng() % static_cast<unsigned>(zero_bias + 1) != 0) continue;
      const long v = static_cast<long>(rng() % static_cast<unsigned long>(2 * range + 1)) - range;
      m(r, c) = Scalar(f, v);
    }
  }
  return m;
}

/// Determinant by plain Gaussian elimination (independent of echelon()).
inline Scalar determinant(Matrix m) {
  const std::size_t n = m.rows();
  Scalar det(m.field(), 1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Scalar(m.field(), 0);
    if (p != c) {
      m.swap_rows(p, c);
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      const Scalar f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

}  // namespace sll::test
