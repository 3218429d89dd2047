#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "sll/linalg.hpp"

namespace sll {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Linear subspace of K^n held as a canonical RREF basis, so equality of
/// subspaces is equality of basis matrices.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Field field, std::size_t ambient_dim);  // zero subspace

  static Subspace span(Field field, std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace full(Field field, std::size_t ambient_dim);
  /// Span of the listed coordinate axes.
  static Subspace coordinates(Field field, std::size_t ambient_dim,
                              const std::vector<std::size_t>& axes);

  [[nodiscard]] Field field() const { return basis_.field(); }
  [[nodiscard]] std::size_t ambient_dim() const { return ambient_; }
  [[nodiscard]] std::size_t dim() const { return basis_.rows(); }
  [[nodiscard]] bool is_zero() const { return dim() == 0; }
  [[nodiscard]] bool is_full() const { return dim() == ambient_; }
  [[nodiscard]] const Matrix& basis() const { return basis_; }
  [[nodiscard]] std::vector<Vector> basis_vectors() const;
  [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }

  [[nodiscard]] bool contains(std::span<const Scalar> v) const;
  [[nodiscard]] bool contains(const Subspace& other) const;
  /// Coordinates of v in the canonical basis, or nullopt when v is outside.
  [[nodiscard]] std::optional<Vector> coordinates_of(std::span<const Scalar> v) const;
  /// v minus its reduction against the basis; zero iff v lies in the subspace.
  [[nodiscard]] Vector residual(std::span<const Scalar> v) const;

  [[nodiscard]] Subspace sum(const Subspace& other) const;
  [[nodiscard]] Subspace intersect(const Subspace& other) const;
  /// Span of the canonical basis rows of `outer` not already in span(this + previous rows).
  /// Requires this ⊆ outer; the result U satisfies U ⊕ this = outer.
  [[nodiscard]] Subspace complement_in(const Subspace& outer) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  /// Canonical order: by dimension, then lexicographic on basis rows.
  friend bool operator<(const Subspace& a, const Subspace& b);

 private:
  void check_same_ambient(const Subspace& other) const;

  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace sll
