#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "sll/splitdec.hpp"

namespace sll {

class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Chain a_1..a_n from ±Λ starting at the source with partial sums in ±Λ and
/// total sign * target.
struct ConnectionWitness {
  std::vector<Root> chain;
  int sign = 1;
  /// Total is -target and -target is not itself a root.
  bool ends_outside_lambda = false;

  [[nodiscard]] Root total() const;
};

/// Shortest connection from a to b (lexicographically least letters among shortest).
/// Throws std::invalid_argument unless a and b are roots.
std::optional<ConnectionWitness> connected(const SplitDecomposition& d, const Root& a, const Root& b);

/// Connection classes, each sorted, ordered by their least root.
std::vector<std::vector<Root>> connection_classes(const SplitDecomposition& d, Exec exec = Exec::Parallel);

struct ClassIdeal {
  std::vector<Root> roots;
  GradedSubspace h_part;  // span of [L_b, L_{-b}]
  GradedSubspace v_part;  // sum of L_b
  GradedSubspace ideal;   // h_part + v_part
};

/// Builds and verifies I_class; throws VerificationError if it is not a subalgebra and ideal.
ClassIdeal class_ideal(const SplitDecomposition& d, const std::vector<Root>& cls);

struct ClassDecomposition {
  std::vector<ClassIdeal> classes;
  GradedSubspace h_lambda;
  GradedSubspace u;  // complement of h_lambda in H
  bool center_zero = false;
  bool perfect = false;
  /// center = 0 and perfect; then U = 0 and the sum of class ideals is direct (verified).
  bool direct_refinement_applies = false;
};

/// Assembles and verifies the class decomposition L = U + sum I_class.
ClassDecomposition decompose(const SplitDecomposition& d, Exec exec = Exec::Parallel);

enum class Upsilon { I, NotI };
const char* to_string(Upsilon u);

struct GradedConnectionWitness {
  std::vector<GradedRoot> chain;
  Upsilon upsilon = Upsilon::I;
  bool trivial = false;  // target is the source root or its negative
};

/// Graded connection from a to b inside Λ^Υ with letters from Λ^¬𝔦.
/// Throws std::invalid_argument if an endpoint is outside Λ^Υ or the partition is not of maximal length.
std::optional<GradedConnectionWitness> neg_I_connected(const SplitDecomposition& d, const RootPartition& p,
                                                       const GradedRoot& a, const GradedRoot& b, Upsilon upsilon);

struct ConnectivityEntry {
  GradedRoot from;
  GradedRoot to;
  std::optional<GradedConnectionWitness> witness;
};

struct ConnectivitySummary {
  bool all_connected[2] = {true, true};  // indexed by Upsilon
  std::vector<ConnectivityEntry> table[2];

  [[nodiscard]] bool holds(Upsilon u) const { return all_connected[static_cast<int>(u)]; }
  [[nodiscard]] const std::vector<ConnectivityEntry>& entries(Upsilon u) const {
    return table[static_cast<int>(u)];
  }
  /// First pair without a witness, if any.
  [[nodiscard]] const ConnectivityEntry* first_failure(Upsilon u) const;
};

ConnectivitySummary neg_I_connectivity_summary(const SplitDecomposition& d, const RootPartition& p);

/// Graded roots of Λ^Υ over both parities, sorted.
std::vector<GradedRoot> graded_roots(const RootPartition& p, Upsilon u);

}  // namespace sll
