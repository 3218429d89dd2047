#pragma once

#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "sll/graded.hpp"
#include "sll/parallel.hpp"

namespace sll {

/// Thrown when an operation that requires a validated algebra receives one
/// that has not passed `validate`.
class NotValidated : public std::logic_error {
 public:
  NotValidated() : std::logic_error("algebra has not been validated as a Leibniz superalgebra") {}
};

/// One structure constant c_{ij}^k of [b_i, b_j] = sum_k c_{ij}^k b_k.
struct StructureConstant {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  Scalar value;
};

struct Violation {
  enum class Kind { Grading, Identity };
  Kind kind;
  std::size_t i;
  std::size_t j;
  std::size_t k;
  Vector residual;  // for Identity: [x,[y,z]] - [[x,y],z] + (-1)^{|y||z|}[[x,z],y]
  [[nodiscard]] std::string describe() const;
};

/// Finite-dimensional ZZ2-graded algebra given by structure constants on a
/// homogeneous basis, with the right super Leibniz identity
///   [x,[y,z]] = [[x,y],z] - (-1)^{|y||z|} [[x,z],y].
class Superalgebra {
 public:
  Superalgebra() = default;
  /// Abelian algebra with the given basis parities.
  Superalgebra(Field field, std::vector<Parity> parity);

  [[nodiscard]] Field field() const { return field_; }
  [[nodiscard]] std::size_t dim() const { return grading_.dim(); }
  [[nodiscard]] const Grading& grading() const { return grading_; }
  [[nodiscard]] Parity parity(std::size_t i) const { return grading_[i]; }

  /// Sets c_{ij}^k; marks the algebra unvalidated.
  void set_constant(std::size_t i, std::size_t j, std::size_t k, const Scalar& value);
  /// [b_i, b_j] as a coordinate vector.
  [[nodiscard]] const Vector& basis_product(std::size_t i, std::size_t j) const {
    return table_[i * dim() + j];
  }
  /// Nonzero structure constants sorted by (i, j, k).
  [[nodiscard]] std::vector<StructureConstant> constants() const;

  /// Bilinear product; throws DimensionError on length mismatch.
  [[nodiscard]] Vector product(std::span<const Scalar> x, std::span<const Scalar> y) const;

  [[nodiscard]] bool validated() const { return validated_; }
  void require_validated() const {
    if (!validated_) throw NotValidated();
  }

  /// Algebra in the basis b'_i = sum_k P(k,i) b_k. P must be invertible and
  /// grading-preserving (block diagonal on even/odd coordinates).
  [[nodiscard]] Superalgebra change_basis(const Matrix& p) const;
  /// Coordinates of vector v (old basis) in the basis given by P.
  static Vector transport(const Matrix& p_inverse, std::span<const Scalar> v);

  /// External direct sum; the basis of b follows the basis of a.
  static Superalgebra direct_sum(const Superalgebra& a, const Superalgebra& b);

  [[nodiscard]] GradedSubspace whole() const { return GradedSubspace::full(field_, grading_); }
  [[nodiscard]] GradedSubspace zero() const { return GradedSubspace(field_, dim()); }

 private:
  friend std::vector<Violation> validate(Superalgebra& a, Exec exec);

  Field field_;
  Grading grading_;
  std::vector<Vector> table_;  // dim*dim dense products
  bool validated_ = false;
};

/// Checks grading compatibility of every constant and the super Leibniz identity
/// on every basis triple. Returns violations sorted by triple; on an empty
/// result the algebra is marked validated.
std::vector<Violation> validate(Superalgebra& a, Exec exec = Exec::Parallel);
/// Same checks without touching the validated flag.
std::vector<Violation> find_violations(const Superalgebra& a, Exec exec = Exec::Parallel);

/// Span of [x, y] over homogeneous bases of X and Y.
GradedSubspace product_space(const Superalgebra& a, const GradedSubspace& x, const GradedSubspace& y);

/// Least graded ideal containing gens (fixpoint of W <- W + [W,A] + [A,W]).
GradedSubspace generated_ideal(const Superalgebra& a, const GradedSubspace& gens);

/// The ideal generated by all [x,y] + (-1)^{|x||y|}[y,x].
GradedSubspace compute_frak_I(const Superalgebra& a);

/// [A, frak_I] = 0.
bool check_eq1(const Superalgebra& a);
bool check_eq1(const Superalgebra& a, const GradedSubspace& frak_i);

/// {x : [x, A] + [A, x] = 0}.
GradedSubspace center(const Superalgebra& a);

/// [A, A].
GradedSubspace derived_subalgebra(const Superalgebra& a);

struct ClosureFailure {
  Vector element;
  std::size_t basis_index;
  bool element_on_left;  // failing product is [element, b_k] (else [b_k, element])
  Vector product;
};

/// First product of the subspace with the algebra that leaves it, if any.
std::optional<ClosureFailure> ideal_failure(const Superalgebra& a, const GradedSubspace& s);
inline bool is_ideal(const Superalgebra& a, const GradedSubspace& s) { return !ideal_failure(a, s); }
/// [S, S] ⊆ S.
bool is_subalgebra(const Superalgebra& a, const GradedSubspace& s);

/// Kernel of the stacked maps v -> [v, w] and v -> [w, v] over the given
/// homogeneous vectors w, returned as a graded subspace.
GradedSubspace two_sided_annihilator(const Superalgebra& a, const std::vector<HomogeneousVector>& ws);

}  // namespace sll
