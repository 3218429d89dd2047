#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sll/subspace.hpp"

namespace sll {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

constexpr Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
constexpr int index(Parity p) { return static_cast<int>(p); }
/// (-1)^{ab}
constexpr int koszul_sign(Parity a, Parity b) {
  return (a == Parity::Odd && b == Parity::Odd) ? -1 : 1;
}
constexpr Parity parity_from(int bit) { return bit ? Parity::Odd : Parity::Even; }
constexpr const char* to_string(Parity p) { return p == Parity::Even ? "0" : "1"; }

/// ZZ2 grading of the ambient coordinates.
class Grading {
 public:
  Grading() = default;
  explicit Grading(std::vector<Parity> parity);

  [[nodiscard]] std::size_t dim() const { return parity_.size(); }
  [[nodiscard]] Parity operator[](std::size_t i) const { return parity_[i]; }
  [[nodiscard]] const std::vector<Parity>& parities() const { return parity_; }
  [[nodiscard]] const std::vector<std::size_t>& axes(Parity p) const { return axes_[index(p)]; }

  /// Even and odd components of v.
  [[nodiscard]] std::pair<Vector, Vector> split(std::span<const Scalar> v) const;
  /// Parity of a nonzero homogeneous vector; nullopt for zero or mixed vectors.
  [[nodiscard]] std::optional<Parity> parity_of(std::span<const Scalar> v) const;

  friend bool operator==(const Grading&, const Grading&) = default;

 private:
  std::vector<Parity> parity_;
  std::vector<std::size_t> axes_[2];
};

/// A homogeneous vector tagged with its parity.
struct HomogeneousVector {
  Vector coords;
  Parity parity;
};

/// Graded subspace A = A_0 ⊕ A_1: `even` is supported on even coordinates and
/// `odd` on odd coordinates; both are canonical.
class GradedSubspace {
 public:
  GradedSubspace() = default;
  GradedSubspace(Field field, std::size_t ambient_dim);  // zero
  /// Throws DimensionError unless the parts are supported on the right coordinates.
  GradedSubspace(const Grading& grading, Subspace even, Subspace odd);

  static GradedSubspace full(Field field, const Grading& grading);
  /// Smallest graded subspace containing the given vectors (spans their homogeneous parts).
  static GradedSubspace hull(Field field, const Grading& grading, const std::vector<Vector>& vectors);
  /// Graded view of a subspace known to be graded; throws DimensionError otherwise.
  static GradedSubspace from_subspace(const Grading& grading, const Subspace& s);

  [[nodiscard]] const Subspace& even() const { return even_; }
  [[nodiscard]] const Subspace& odd() const { return odd_; }
  [[nodiscard]] const Subspace& part(Parity p) const { return p == Parity::Even ? even_ : odd_; }
  [[nodiscard]] const Subspace& whole() const { return whole_; }
  [[nodiscard]] std::size_t dim() const { return whole_.dim(); }
  [[nodiscard]] bool is_zero() const { return dim() == 0; }
  [[nodiscard]] Field field() const { return whole_.field(); }
  [[nodiscard]] std::size_t ambient_dim() const { return whole_.ambient_dim(); }

  /// Canonical homogeneous basis: even rows, then odd rows.
  [[nodiscard]] std::vector<HomogeneousVector> homogeneous_basis() const;

  [[nodiscard]] bool contains(std::span<const Scalar> v) const { return whole_.contains(v); }
  [[nodiscard]] bool contains(const GradedSubspace& o) const {
    return even_.contains(o.even_) && odd_.contains(o.odd_);
  }
  [[nodiscard]] GradedSubspace sum(const GradedSubspace& o) const;
  [[nodiscard]] GradedSubspace intersect(const GradedSubspace& o) const;

  friend bool operator==(const GradedSubspace& a, const GradedSubspace& b) {
    return a.even_ == b.even_ && a.odd_ == b.odd_;
  }
  friend bool operator<(const GradedSubspace& a, const GradedSubspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.whole_ < b.whole_;
  }

 private:
  GradedSubspace(Subspace even, Subspace odd);

  Subspace even_;
  Subspace odd_;
  Subspace whole_;
};

}  // namespace sll
