#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "sll/analyze.hpp"
#include "sll/examples.hpp"

namespace sll {

inline constexpr int kReportSchema = 1;

/// A machine report and the exit code it implies: 0 if every check passed, 1 if a
/// mathematical check failed (or a requested expectation was not met).
struct Report {
  nlohmann::json data;
  int exit_code = 0;
};

struct ConnectQuery {
  std::optional<std::string> from;
  std::optional<std::string> to;
  bool graded = false;  // ¬𝔦-connections between graded roots "R@p"
  Upsilon upsilon = Upsilon::I;
};

struct AnalyzeOptions {
  std::optional<std::uint64_t> oracle_bound;
  bool expect_simple = false;
  Exec exec = Exec::Parallel;
};

Report check_report(AlgebraDocument doc);
Report split_report(AlgebraDocument doc);
Report connect_report(AlgebraDocument doc, const ConnectQuery& q);
Report decompose_report(AlgebraDocument doc);
Report analyze_report(AlgebraDocument doc, const AnalyzeOptions& opt);

/// Parses "R@0" / "R@1" (R as accepted by Root::parse).
GradedRoot parse_graded_root(Field field, const std::string& text);

std::string render_json(const nlohmann::json& report);
/// Indented plain-text rendering of a machine report.
std::string render_human(const nlohmann::json& report);

/// Vector written in basis labels, e.g. "2*u1 - e2"; b0, b1, ... when no labels are given.
std::string label_vector(const Vector& v, const std::vector<std::string>& labels);

}  // namespace sll
