#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sll/scalar.hpp"

namespace sll {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);
void axpy(Vector& y, const Scalar& a, std::span<const Scalar> x);  // y += a*x
Vector scaled(std::span<const Scalar> x, const Scalar& a);
std::string to_string(std::span<const Scalar> v);

/// Dense row-major matrix over a fixed field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  static Matrix from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows);

  [[nodiscard]] Field field() const { return field_; }
  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::span<const Scalar> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  [[nodiscard]] std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  [[nodiscard]] Vector row_vector(std::size_t r) const {
    auto s = row(r);
    return {s.begin(), s.end()};
  }
  [[nodiscard]] Vector column(std::size_t c) const;

  void append_row(std::span<const Scalar> v);
  void swap_rows(std::size_t a, std::size_t b);

  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] Vector apply(std::span<const Scalar> x) const;  // this * x
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct EchelonForm {
  Matrix reduced;                    // zero rows removed
  std::vector<std::size_t> pivots;   // pivot column of each row
};

/// Reduced row echelon form with zero rows dropped.
EchelonForm echelon(Matrix m);
inline Matrix rref(Matrix m) { return echelon(std::move(m)).reduced; }
std::size_t rank(const Matrix& m);

class Subspace;
/// Right null space {x : m x = 0}.
Subspace kernel(const Matrix& m);

/// Inverse of a square matrix; throws std::invalid_argument when singular.
Matrix inverse(const Matrix& m);

}  // namespace sll
