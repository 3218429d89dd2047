#pragma once

#include <array>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "sll/superalgebra.hpp"

namespace sll {

/// Functional on H_0 given by its values on the fixed basis of H_0.
struct Root {
  std::vector<Scalar> values;

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] std::string to_string() const;  // "2" or "(2,0)"
  /// Parses "2", "-1/2" or "2,0" (optionally parenthesized).
  static Root parse(Field field, std::string_view text);

  friend Root operator-(const Root& a);
  friend Root operator+(const Root& a, const Root& b);
  friend bool operator==(const Root&, const Root&) = default;
  /// Lexicographic on values.
  friend std::strong_ordering operator<=>(const Root& a, const Root& b);
};

struct GradedRoot {
  Root root;
  Parity parity;

  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const GradedRoot&, const GradedRoot&) = default;
  friend std::strong_ordering operator<=>(const GradedRoot& a, const GradedRoot& b);
};

struct CartanInput {
  std::vector<Vector> vectors;
};

class SplitError : public std::runtime_error {
 public:
  enum class Kind { NotAbelian, NotGraded, NotSplit };
  SplitError(Kind kind, const std::string& what, std::vector<Vector> witness)
      : std::runtime_error(what), kind_(kind), witness_(std::move(witness)) {}
  [[nodiscard]] Kind kind() const { return kind_; }
  /// Offending vectors: the non-commuting pair, the mixed generator, or the
  /// part of the algebra outside H that the eigenspaces fail to account for.
  [[nodiscard]] const std::vector<Vector>& witness() const { return witness_; }

 private:
  Kind kind_;
  std::vector<Vector> witness_;
};

const char* to_string(SplitError::Kind k);

struct RootSpace {
  Root root;
  Subspace even;
  Subspace odd;

  [[nodiscard]] const Subspace& part(Parity p) const { return p == Parity::Even ? even : odd; }
};

/// One nonzero graded root space L_{alpha,i}.
struct Slot {
  GradedRoot key;
  Subspace space;
};

struct SplitDecomposition {
  Superalgebra algebra;
  GradedSubspace H;
  std::vector<Vector> h0_basis;
  std::vector<RootSpace> roots;  // sorted by root
  GradedSubspace zero_space;

  [[nodiscard]] const RootSpace* find(const Root& r) const;
  [[nodiscard]] bool is_root(const Root& r) const { return find(r) != nullptr; }
  [[nodiscard]] std::vector<Root> root_list() const;
  /// L_{r,p}; the zero root gives H_p, a non-root gives 0.
  [[nodiscard]] Subspace slot_space(const Root& r, Parity p) const;
  /// Nonzero graded root spaces, ordered by (root, parity).
  [[nodiscard]] std::vector<Slot> slots() const;
  [[nodiscard]] Root zero_root() const;
};

/// Root-space decomposition of a validated algebra relative to H = span(cartan).
SplitDecomposition split(const Superalgebra& a, const CartanInput& cartan);

struct SplitFactViolation {
  GradedRoot left;
  GradedRoot right;
  Vector product;  // a product outside L_{alpha+beta, i+j}

  [[nodiscard]] std::string describe() const;
};

/// [L_{a,i}, L_{b,j}] ⊆ L_{a+b,i+j} for every pair of graded root spaces, H included as root 0.
std::vector<SplitFactViolation> verify_split_facts(const SplitDecomposition& d);

struct RootPartition {
  GradedSubspace frak_i;
  std::array<std::vector<Root>, 2> lambda_I;     // indexed by parity
  std::array<std::vector<Root>, 2> lambda_notI;  // indexed by parity
  std::vector<GradedRoot> unclassifiable;        // slots straddling frak_i
  bool maximal_length = true;

  [[nodiscard]] bool partial() const { return !unclassifiable.empty(); }
  [[nodiscard]] bool in_I(const Root& r, Parity p) const;
  [[nodiscard]] bool in_notI(const Root& r, Parity p) const;
  /// Distinct roots over both parities.
  [[nodiscard]] std::vector<Root> roots_I() const;
  [[nodiscard]] std::vector<Root> roots_notI() const;
};

RootPartition partition_roots(const SplitDecomposition& d, const GradedSubspace& frak_i);

}  // namespace sll
