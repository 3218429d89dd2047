#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sll/examples.hpp"

namespace sll {

struct FuzzMember {
  AlgebraDocument doc;       // the emitted document
  AlgebraDocument original;  // the same algebra before the change of basis
  std::optional<Matrix> basis_change;
  std::string provenance;
  std::size_t root_blocks = 0;  // summands with a nonempty root system
};

/// Deterministic corpus of direct sums of the golden examples and abelian blocks,
/// with rescaled Cartan generators and a random grading-preserving change of basis.
std::vector<FuzzMember> fuzz_corpus(std::uint64_t seed, std::size_t count);

}  // namespace sll
