#include <CLI11.hpp>
#include <filesystem>
#include <iostream>

#include "sll/fuzz.hpp"
#include "sll/io.hpp"
#include "sll/report.hpp"

using namespace sll;

namespace {

constexpr int kUsageError = 2;

struct Globals {
  bool json = false;
  std::string field;
};

std::optional<Field> field_of(const Globals& g) {
  if (g.field.empty()) return std::nullopt;
  return Field::parse(g.field);
}

int emit(const Report& r, const Globals& g) {
  std::cout << (g.json ? render_json(r.data) : render_human(r.data));
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Split Leibniz superalgebra toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Print the machine-readable report");
  app.add_option("--field", g.field, "Base field: Q or Fp:p (overrides the document)");

  std::string file;
  auto* check = app.add_subcommand("check", "Validate the super Leibniz identity and the grading");
  check->add_option("FILE", file)->required();

  auto* split_cmd = app.add_subcommand("split", "Root-space decomposition relative to the document's Cartan");
  split_cmd->add_option("FILE", file)->required();

  ConnectQuery q;
  std::string upsilon = "I";
  std::string from;
  std::string to;
  auto* connect = app.add_subcommand("connect", "Connections between roots and connection classes");
  connect->add_option("FILE", file)->required();
  connect->add_option("--from", from, "Source root, e.g. 2 or (2,0); with --neg-i, R@0 or R@1");
  connect->add_option("--to", to, "Target root");
  connect->add_flag("--neg-i", q.graded, "Graded connections through notI roots");
  connect->add_option("--upsilon", upsilon, "Root set for --neg-i")->check(CLI::IsMember({"I", "notI"}));

  auto* decompose_cmd = app.add_subcommand("decompose", "Decomposition into connection-class ideals");
  decompose_cmd->add_option("FILE", file)->required();

  AnalyzeOptions opt;
  std::uint64_t bound = 0;
  auto* analyze = app.add_subcommand("analyze", "Hypotheses, simplicity verdicts and classification");
  analyze->add_option("FILE", file)->required();
  analyze->add_option("--oracle-bound", bound, "Candidate limit for the ideal oracle");
  analyze->add_flag("--expect-simple", opt.expect_simple, "Exit 1 unless the verdict is Simple");

  std::string which;
  int n = 1;
  std::string out_file;
  auto* gen = app.add_subcommand("gen", "Emit a golden example document");
  gen->add_option("NAME", which)->required()->check(CLI::IsMember({"example1", "example2"}));
  gen->add_option("--n", n, "Parameter of example2")->check(CLI::PositiveNumber);
  gen->add_option("-o", out_file, "Output file (default stdout)");

  std::uint64_t seed = 1;
  std::size_t count = 10;
  std::string out_dir;
  auto* fuzz = app.add_subcommand("fuzz", "Write a deterministic corpus of documents");
  fuzz->add_option("--seed", seed)->required();
  fuzz->add_option("--count", count)->required();
  fuzz->add_option("-o", out_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    const auto field = field_of(g);
    const auto load = [&] { return load_document(file, field); };
    if (check->parsed()) return emit(check_report(load()), g);
    if (split_cmd->parsed()) return emit(split_report(load()), g);
    if (connect->parsed()) {
      if (!from.empty()) q.from = from;
      if (!to.empty()) q.to = to;
      q.upsilon = upsilon == "I" ? Upsilon::I : Upsilon::NotI;
      return emit(connect_report(load(), q), g);
    }
    if (decompose_cmd->parsed()) return emit(decompose_report(load()), g);
    if (analyze->parsed()) {
      if (bound > 0) opt.oracle_bound = bound;
      return emit(analyze_report(load(), opt), g);
    }
    if (gen->parsed()) {
      const Field f = field.value_or(Field::rationals());
      const auto doc = which == "example1" ? gen_example1(f) : gen_example2(n, f);
      if (out_file.empty()) {
        std::cout << dump_document(doc);
      } else {
        save_document(doc, out_file);
      }
      return 0;
    }
    if (fuzz->parsed()) {
      std::filesystem::create_directories(out_dir);
      nlohmann::json listing = nlohmann::json::array();
      for (const auto& m : fuzz_corpus(seed, count)) {
        const auto path = (std::filesystem::path(out_dir) / (m.doc.meta.name + ".json")).string();
        save_document(m.doc, path);
        listing.push_back({{"file", path}, {"provenance", m.provenance}});
      }
      nlohmann::json r{{"schema", kReportSchema}, {"command", "fuzz"}, {"seed", seed}, {"members", listing}};
      std::cout << (g.json ? render_json(r) : render_human(r));
      return 0;
    }
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
