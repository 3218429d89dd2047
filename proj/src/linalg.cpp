#include "sll/linalg.hpp"

#include <stdexcept>

#include "sll/subspace.hpp"

namespace sll {

Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v = zero_vector(n);
  v.at(i) = Scalar(1);
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  for (const auto& s : v) {
    if (!s.is_zero()) return false;
  }
  return true;
}

void axpy(Vector& y, const Scalar& a, std::span<const Scalar> x) {
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) y[i] += a * x[i];
  }
}

Vector scaled(std::span<const Scalar> x, const Scalar& a) {
  Vector r(x.begin(), x.end());
  for (auto& s : r) s *= a;
  return r;
}

std::string to_string(std::span<const Scalar> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + ")";
}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar(field, 0)) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(field, 1);
  return m;
}

Matrix Matrix::from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(field, 0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

void Matrix::append_row(std::span<const Scalar> v) {
  if (v.size() != cols_) {
    throw std::invalid_argument("row of length " + std::to_string(v.size()) +
                                " appended to matrix with " + std::to_string(cols_) + " columns");
  }
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Vector Matrix::apply(std::span<const Scalar> x) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  Vector y(rows_, Scalar(field_, 0));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& a = (*this)(r, c);
      if (!a.is_zero() && !x[c].is_zero()) y[r] += a * x[c];
    }
  }
  return y;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  Matrix p(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) p(i, j) += aik * b(k, j);
      }
    }
  }
  return p;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("matrix difference shape mismatch");
  }
  Matrix d = a;
  for (std::size_t i = 0; i < d.data_.size(); ++i) d.data_[i] -= b.data_[i];
  return d;
}

EchelonForm echelon(Matrix m) {
  EchelonForm out;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t p = lead;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(lead, p);
    const Scalar inv = m(lead, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(lead, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, c).is_zero()) continue;
      const Scalar f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m(lead, j).is_zero()) m(r, j) -= f * m(lead, j);
      }
    }
    out.pivots.push_back(c);
    ++lead;
  }
  out.reduced = Matrix(m.field(), 0, m.cols());
  for (std::size_t r = 0; r < lead; ++r) out.reduced.append_row(m.row(r));
  return out;
}

std::size_t rank(const Matrix& m) { return echelon(m).pivots.size(); }

Subspace kernel(const Matrix& m) {
  const auto ef = echelon(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : ef.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n, Scalar(m.field(), 0));
    v[f] = Scalar(m.field(), 1);
    for (std::size_t r = 0; r < ef.pivots.size(); ++r) v[ef.pivots[r]] = -ef.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.field(), n, basis);
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar(m.field(), 1);
  }
  const auto ef = echelon(std::move(aug));
  if (ef.pivots.size() < n || (n > 0 && ef.pivots[n - 1] != n - 1)) {
    throw std::invalid_argument("matrix is singular");
  }
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = ef.reduced(r, n + c);
  }
  return inv;
}

}  // namespace sll
