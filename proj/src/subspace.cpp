#include "sll/subspace.hpp"

#include <algorithm>

namespace sll {

Subspace::Subspace(Field field, std::size_t ambient_dim)
    : ambient_(ambient_dim), basis_(field, 0, ambient_dim) {}

Subspace Subspace::span(Field field, std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Subspace s(field, ambient_dim);
  if (vectors.empty()) return s;
  auto ef = echelon(Matrix::from_rows(field, ambient_dim, vectors));
  s.basis_ = std::move(ef.reduced);
  s.pivots_ = std::move(ef.pivots);
  return s;
}

Subspace Subspace::full(Field field, std::size_t ambient_dim) {
  Subspace s(field, ambient_dim);
  s.basis_ = Matrix::identity(field, ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::coordinates(Field field, std::size_t ambient_dim,
                               const std::vector<std::size_t>& axes) {
  std::vector<Vector> rows;
  for (auto a : axes) {
    Vector v(ambient_dim, Scalar(field, 0));
    v.at(a) = Scalar(field, 1);
    rows.push_back(std::move(v));
  }
  return span(field, ambient_dim, rows);
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row_vector(r));
  return out;
}

Vector Subspace::residual(std::span<const Scalar> v) const {
  if (v.size() != ambient_) {
    throw DimensionError("vector of length " + std::to_string(v.size()) +
                         " tested against subspace of K^" + std::to_string(ambient_));
  }
  Vector r(v.begin(), v.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Scalar c = r[pivots_[i]];
    if (!c.is_zero()) axpy(r, -c, basis_.row(i));
  }
  return r;
}

bool Subspace::contains(std::span<const Scalar> v) const { return sll::is_zero(residual(v)); }

bool Subspace::contains(const Subspace& other) const {
  check_same_ambient(other);
  if (other.dim() > dim()) return false;
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row(r))) return false;
  }
  return true;
}

std::optional<Vector> Subspace::coordinates_of(std::span<const Scalar> v) const {
  if (!contains(v)) return std::nullopt;
  Vector c;
  c.reserve(dim());
  for (auto p : pivots_) c.push_back(v[p]);
  return c;
}

Subspace Subspace::sum(const Subspace& other) const {
  check_same_ambient(other);
  auto rows = basis_vectors();
  for (auto& v : other.basis_vectors()) rows.push_back(std::move(v));
  return span(field(), ambient_, rows);
}

Subspace Subspace::intersect(const Subspace& other) const {
  check_same_ambient(other);
  if (is_zero() || other.is_zero()) return Subspace(field(), ambient_);
  // Kernel of [A^T | B^T]: each kernel vector (a, b) gives a^T A = -b^T B in both spaces.
  const std::size_t da = dim();
  const std::size_t db = other.dim();
  Matrix stacked(field(), ambient_, da + db);
  for (std::size_t c = 0; c < ambient_; ++c) {
    for (std::size_t i = 0; i < da; ++i) stacked(c, i) = basis_(i, c);
    for (std::size_t j = 0; j < db; ++j) stacked(c, da + j) = other.basis_(j, c);
  }
  const Subspace k = kernel(stacked);
  std::vector<Vector> vecs;
  for (std::size_t r = 0; r < k.dim(); ++r) {
    Vector v(ambient_, Scalar(field(), 0));
    for (std::size_t i = 0; i < da; ++i) axpy(v, k.basis()(r, i), basis_.row(i));
    vecs.push_back(std::move(v));
  }
  return span(field(), ambient_, vecs);
}

Subspace Subspace::complement_in(const Subspace& outer) const {
  check_same_ambient(outer);
  if (!outer.contains(*this)) {
    throw DimensionError("complement requested for a subspace not contained in the outer space");
  }
  Subspace acc = *this;
  std::vector<Vector> added;
  for (std::size_t r = 0; r < outer.dim() && acc.dim() < outer.dim(); ++r) {
    const auto row = outer.basis_.row(r);
    if (!acc.contains(row)) {
      added.emplace_back(row.begin(), row.end());
      acc = acc.sum(span(field(), ambient_, {added.back()}));
    }
  }
  return span(field(), ambient_, added);
}

bool operator<(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (std::size_t r = 0; r < a.dim(); ++r) {
    const auto ra = a.basis_.row(r);
    const auto rb = b.basis_.row(r);
    const auto c = std::lexicographical_compare_three_way(ra.begin(), ra.end(), rb.begin(), rb.end());
    if (c != 0) return c < 0;
  }
  return false;
}

void Subspace::check_same_ambient(const Subspace& other) const {
  if (ambient_ != other.ambient_) {
    throw DimensionError("ambient dimension mismatch: " + std::to_string(ambient_) + " vs " +
                         std::to_string(other.ambient_));
  }
}

}  // namespace sll
