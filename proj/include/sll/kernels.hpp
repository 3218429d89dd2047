#pragma once

// Data-parallel inner loops. Each kernel has a serial reference and an OpenMP
// variant; both return identical results in identical order.

#include <cstdint>
#include <vector>

#include "sll/superalgebra.hpp"

namespace sll::kernels {

/// Super Leibniz residuals on all basis triples (i, j, k), sorted by triple.
std::vector<Violation> identity_violations(const Superalgebra& a, Exec exec);

/// Candidate ideal shapes for the ideal oracle, in bitmask form.
///
/// A candidate is (lattice element h, slot subset S). `slot_requires[s]` lists,
/// for every product of slot s with a basis vector, the slots the product
/// touches (`slots`) and the lattice elements containing its H-component
/// (`lattice_ok`; all ones when the H-component is zero). Lattice element h
/// itself must map into S: `lattice_requires[h]` is the union of slots touched
/// by products of its basis with the algebra.
struct OracleTables {
  std::size_t slot_count = 0;
  std::size_t lattice_size = 0;
  struct Requirement {
    std::uint64_t slots;
    std::uint64_t lattice_ok;
  };
  std::vector<std::vector<Requirement>> slot_requires;
  std::vector<std::uint64_t> lattice_requires;
};

/// Candidate indices (h * 2^slot_count + S) that pass the bitmask ideal test,
/// in ascending order.
std::vector<std::uint64_t> oracle_scan(const OracleTables& t, Exec exec);

/// Candidate ideal test for one (lattice element, slot subset) pair.
bool oracle_accepts(const OracleTables& t, std::uint64_t lattice_index, std::uint64_t subset);

/// Finite transition system on integer states: next[s * letters + l] is the
/// state reached from s by letter l, or -1.
struct SumGraph {
  std::size_t states = 0;
  std::size_t letters = 0;
  std::vector<std::int32_t> next;
};

/// BFS reachability from each source; row r marks the states reachable from sources[r].
std::vector<std::vector<char>> reachable_from(const SumGraph& g, const std::vector<std::size_t>& sources,
                                              Exec exec);

}  // namespace sll::kernels
