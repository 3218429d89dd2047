#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sll/connect.hpp"

namespace sll {

struct RootMultViolation {
  int condition;  // 1: notI x notI, 2: [L_gamma (frak-I side), L_alpha]
  GradedRoot left;
  GradedRoot right;
};

struct RootMultiplicativity {
  bool holds = true;
  std::vector<RootMultViolation> violations;
};

/// Nonvanishing of [L_{a,i}, L_{b,j}] for notI x notI pairs with a+b a root, and of
/// [L_{g,j}, L_{a,i}] for notI root a, frak-I root g with a+g a frak-I root.
RootMultiplicativity root_multiplicative(const SplitDecomposition& d, const RootPartition& p);

/// Elements annihilating, on both sides, every root space of a root outside Λ^𝔦.
/// Throws VerificationError if the result does not contain the center.
GradedSubspace lie_annihilator(const SplitDecomposition& d, const RootPartition& p);

/// Σ_{β ∈ Λ} [L_β, L_{-β}].
GradedSubspace h_lambda(const SplitDecomposition& d);

struct HypothesisReport {
  bool H_equals_H_Lambda = false;
  bool center_zero = false;
  bool lie_annihilator_zero = false;
  bool perfect = false;
  RootMultiplicativity root_multiplicative;
  std::size_t card_notI = 0;
  std::size_t card_I = 0;
  /// H_0 and H_1 are spanned by brackets of notI root spaces only. Checked
  /// when H = H_Λ; vacuously true otherwise.
  bool eq11_holds = true;
  bool eq11_applicable = false;
};

HypothesisReport hypothesis_report(const SplitDecomposition& d, const RootPartition& p);

enum class Verdict { Simple, NotSimple, Undetermined };
const char* to_string(Verdict v);

struct TheoremVerdict {
  Verdict verdict = Verdict::Undetermined;
  std::string failed_hypothesis;  // Undetermined
  std::optional<ConnectivityEntry> failing_pair;  // NotSimple
  std::optional<Upsilon> failing_upsilon;
  std::optional<GradedSubspace> certificate;  // NotSimple, when a generated slot ideal exhibits it
};

TheoremVerdict simplicity_theorem_mode(const SplitDecomposition& d, const RootPartition& p,
                                       const HypothesisReport& hyp, const ConnectivitySummary& conn);

class OracleBoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 2^20, or SLL_ORACLE_BOUND when set to a positive integer.
std::uint64_t default_oracle_bound();

struct OracleVerdict {
  Verdict verdict = Verdict::Undetermined;
  std::string reason;
  std::vector<GradedSubspace> ideals;  // all graded ideals of the enumerated shape, canonically sorted
  std::optional<GradedSubspace> certificate;
  std::uint64_t candidates = 0;
  std::size_t lattice_size = 0;
  std::size_t slot_count = 0;
  bool complete = false;  // dim H <= 1
};

/// Exhaustive search over candidates W_H ⊕ (sum of a subset of slots), with W_H in
/// the lattice of sums of the lines [L_{β,i}, L_{-β,j}] plus 0 and H.
/// Throws OracleBoundExceeded if the candidate count exceeds `bound`.
OracleVerdict simplicity_oracle(const SplitDecomposition& d, const RootPartition& p,
                                std::optional<std::uint64_t> bound = std::nullopt, Exec exec = Exec::Parallel);

struct LemmaReport {
  std::size_t ideals_checked = 0;
  bool outside_H_plus_I_applies = false;  // hypotheses for "I ⊄ H + 𝔦 implies I = L"
  bool inside_I_applies = false;          // hypotheses for "0 ≠ I ⊆ 𝔦 implies I = 𝔦"
  std::vector<std::string> violations;
};

/// Root-aligned shape of every ideal; I ∩ H ⊆ Z_Lie when I ⊆ H + 𝔦; and the two
/// proposition conclusions on instances satisfying their hypotheses.
LemmaReport oracle_lemma_checks(const SplitDecomposition& d, const RootPartition& p, const HypothesisReport& hyp,
                                const ConnectivitySummary& conn, const std::vector<GradedSubspace>& ideals);

enum class CaseTag { Case1_Simple, Case2i, Case2ii, Case3, Case4i, Case4ii, Case4iii, Unclassified };
const char* to_string(CaseTag t);

struct ClassificationResult {
  CaseTag tag = CaseTag::Unclassified;
  std::optional<GradedSubspace> I;
  std::optional<GradedSubspace> K;
  std::uint32_t char_K = 0;
  std::vector<std::string> failed_preconditions;
  std::vector<std::string> diagnostics;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Matches the algebra against the small-cardinality case list. With `strict`, unmet
/// preconditions throw PreconditionError; otherwise they are recorded and matching proceeds.
ClassificationResult classify_small(const SplitDecomposition& d, const RootPartition& p, const HypothesisReport& hyp,
                                    const ConnectivitySummary& conn, const OracleVerdict& oracle,
                                    bool strict = true);

/// Preconditions of classify_small that fail, by name.
std::vector<std::string> classification_preconditions(const HypothesisReport& hyp, const ConnectivitySummary& conn);

}  // namespace sll
