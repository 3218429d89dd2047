#include "sll/report.hpp"

#include <sstream>

#include "sll/io.hpp"

namespace sll {

using nlohmann::json;

namespace {

json scalars(const Vector& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

json root_json(const Root& r) {
  json out = json::array();
  for (const auto& s : r.values) out.push_back(s.to_string());
  return out;
}

json roots_json(const std::vector<Root>& rs) {
  json out = json::array();
  for (const auto& r : rs) out.push_back(r.to_string());
  return out;
}

json graded_json(const std::vector<GradedRoot>& rs) {
  json out = json::array();
  for (const auto& r : rs) out.push_back(r.to_string());
  return out;
}

class Builder {
 public:
  explicit Builder(AlgebraDocument doc, const std::string& command) : doc_(std::move(doc)) {
    if (doc_.meta.basis.empty()) {
      for (std::size_t i = 0; i < doc_.algebra.dim(); ++i) doc_.meta.basis.push_back("b" + std::to_string(i));
    }
    r_.data["schema"] = kReportSchema;
    r_.data["command"] = command;
    r_.data["input"] = {{"name", doc_.meta.name},
                        {"dim", doc_.algebra.dim()},
                        {"field", doc_.algebra.field().to_string()},
                        {"basis", doc_.meta.basis}};
  }

  Report& report() { return r_; }
  json& data() { return r_.data; }
  const Superalgebra& algebra() const { return doc_.algebra; }
  void fail() { r_.exit_code = 1; }

  json vec(const Vector& v) const { return label_vector(v, doc_.meta.basis); }

  json space(const Subspace& s) const {
    json out = json::array();
    for (const auto& v : s.basis_vectors()) out.push_back(vec(v));
    return out;
  }
  json space(const GradedSubspace& s) const {
    return {{"dim", s.dim()}, {"even", space(s.even())}, {"odd", space(s.odd())}};
  }

  bool validate_stage() {
    const auto violations = validate(doc_.algebra);
    json v = json::array();
    for (const auto& x : violations) {
      json e{{"kind", x.kind == Violation::Kind::Grading ? "grading" : "identity"},
             {"triple", {x.i, x.j, x.k}},
             {"message", x.describe()}};
      if (x.kind == Violation::Kind::Identity) e["residual"] = vec(x.residual);
      v.push_back(std::move(e));
    }
    r_.data["validation"] = {{"ok", violations.empty()}, {"violations", v}};
    if (!violations.empty()) fail();
    return violations.empty();
  }

  std::optional<SplitDecomposition> split_stage() {
    if (doc_.cartan.empty()) throw DocumentError("cartan", "a Cartan subalgebra is required for this command");
    try {
      auto d = split(doc_.algebra, {doc_.cartan});
      json roots = json::array();
      for (const auto& rs : d.roots) {
        roots.push_back({{"root", rs.root.to_string()},
                         {"values", root_json(rs.root)},
                         {"even", space(rs.even)},
                         {"odd", space(rs.odd)}});
      }
      json facts = json::array();
      for (const auto& f : verify_split_facts(d)) facts.push_back(f.describe());
      if (!facts.empty()) fail();
      r_.data["split"] = {{"ok", facts.empty()}, {"H", space(d.H)}, {"roots", roots}, {"fact_violations", facts}};
      return d;
    } catch (const SplitError& e) {
      json witness = json::array();
      for (const auto& w : e.witness()) witness.push_back({{"label", vec(w)}, {"coords", scalars(w)}});
      r_.data["split"] = {{"ok", false}, {"error", {{"kind", to_string(e.kind())}, {"message", e.what()}, {"witness", witness}}}};
      fail();
      return std::nullopt;
    }
  }

  RootPartition partition_stage(const SplitDecomposition& d) {
    const auto frak_i = compute_frak_I(d.algebra);
    auto p = partition_roots(d, frak_i);
    const bool eq1 = check_eq1(d.algebra, frak_i);
    if (!eq1) fail();
    r_.data["frak_I"] = space(frak_i);
    r_.data["partition"] = {{"lambda_I", {{"even", roots_json(p.lambda_I[0])}, {"odd", roots_json(p.lambda_I[1])}}},
                            {"lambda_notI",
                             {{"even", roots_json(p.lambda_notI[0])}, {"odd", roots_json(p.lambda_notI[1])}}},
                            {"unclassifiable", graded_json(p.unclassifiable)},
                            {"maximal_length", p.maximal_length && !p.partial()},
                            {"L_times_frak_I_zero", eq1}};
    return p;
  }

  json witness_json(const ConnectionWitness& w) const {
    return {{"chain", roots_json(w.chain)}, {"sign", w.sign}, {"ends_outside_lambda", w.ends_outside_lambda}};
  }

  json graded_witness_json(const GradedConnectionWitness& w) const {
    return {{"chain", graded_json(w.chain)}, {"upsilon", to_string(w.upsilon)}, {"trivial", w.trivial}};
  }

  json classes_json(const SplitDecomposition& d, const std::vector<std::vector<Root>>& classes, bool& flagged) const {
    json out = json::array();
    for (const auto& cls : classes) {
      json ws = json::array();
      for (std::size_t k = 1; k < cls.size(); ++k) {
        const auto w = connected(d, cls.front(), cls[k]);
        if (!w) throw VerificationError("class member " + cls[k].to_string() + " is not connected to " + cls.front().to_string());
        flagged = flagged || w->ends_outside_lambda;
        auto j = witness_json(*w);
        j["from"] = cls.front().to_string();
        j["to"] = cls[k].to_string();
        ws.push_back(std::move(j));
      }
      out.push_back({{"roots", roots_json(cls)}, {"witnesses", ws}});
    }
    return out;
  }

  json summary_json(const ConnectivitySummary& s, bool full) const {
    json out = json::object();
    for (Upsilon u : {Upsilon::I, Upsilon::NotI}) {
      json part{{"all_connected", s.holds(u)}, {"pairs", s.entries(u).size()}};
      if (const auto* f = s.first_failure(u)) part["first_failure"] = {{"from", f->from.to_string()}, {"to", f->to.to_string()}};
      if (full) {
        json table = json::array();
        for (const auto& e : s.entries(u)) {
          json row{{"from", e.from.to_string()}, {"to", e.to.to_string()}};
          row["witness"] = e.witness ? graded_witness_json(*e.witness) : json(nullptr);
          table.push_back(std::move(row));
        }
        part["table"] = table;
      }
      out[to_string(u)] = part;
    }
    return out;
  }

  json decomposition_json(const ClassDecomposition& dec) const {
    json classes = json::array();
    for (const auto& c : dec.classes) {
      classes.push_back(
          {{"roots", roots_json(c.roots)}, {"h_part", space(c.h_part)}, {"v_dim", c.v_part.dim()}, {"ideal_dim", c.ideal.dim()}});
    }
    return {{"classes", classes},
            {"H_Lambda", space(dec.h_lambda)},
            {"U", space(dec.u)},
            {"center_zero", dec.center_zero},
            {"perfect", dec.perfect},
            {"direct_sum_of_class_ideals", dec.direct_refinement_applies}};
  }

 private:
  AlgebraDocument doc_;
  Report r_;
};

json hypotheses_json(const HypothesisReport& h) {
  json rm = json::array();
  for (const auto& v : h.root_multiplicative.violations) {
    rm.push_back({{"condition", v.condition}, {"left", v.left.to_string()}, {"right", v.right.to_string()}});
  }
  return {{"H_equals_H_Lambda", h.H_equals_H_Lambda},
          {"center_zero", h.center_zero},
          {"lie_annihilator_zero", h.lie_annihilator_zero},
          {"perfect", h.perfect},
          {"root_multiplicative", h.root_multiplicative.holds},
          {"root_multiplicative_violations", rm},
          {"card_notI", h.card_notI},
          {"card_I", h.card_I},
          {"eq11_holds", h.eq11_holds},
          {"eq11_applicable", h.eq11_applicable}};
}

}  // namespace

std::string label_vector(const Vector& v, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    const std::string name = i < labels.size() ? labels[i] : "b" + std::to_string(i);
    Scalar c = v[i];
    bool negative = c.modulus() == 0 && c < Scalar(0);
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (!c.is_one()) out += c.to_string() + "*";
    out += name;
  }
  return out.empty() ? "0" : out;
}

GradedRoot parse_graded_root(Field field, const std::string& text) {
  const auto at = text.rfind('@');
  if (at == std::string::npos) throw std::invalid_argument("graded root '" + text + "' must have the form R@0 or R@1");
  const auto par = text.substr(at + 1);
  if (par != "0" && par != "1") throw std::invalid_argument("parity in '" + text + "' must be 0 or 1");
  return {Root::parse(field, text.substr(0, at)), par == "0" ? Parity::Even : Parity::Odd};
}

Report check_report(AlgebraDocument doc) {
  Builder b(std::move(doc), "check");
  b.validate_stage();
  return b.report();
}

Report split_report(AlgebraDocument doc) {
  Builder b(std::move(doc), "split");
  if (b.validate_stage()) b.split_stage();
  return b.report();
}

Report connect_report(AlgebraDocument doc, const ConnectQuery& q) {
  Builder b(std::move(doc), "connect");
  if (!b.validate_stage()) return b.report();
  const auto d = b.split_stage();
  if (!d) return b.report();
  const Field f = d->algebra.field();
  if (q.from.has_value() != q.to.has_value()) throw std::invalid_argument("--from and --to go together");
  if (!q.graded) {
    bool flagged = false;
    if (q.from) {
      const Root a = Root::parse(f, *q.from);
      const Root c = Root::parse(f, *q.to);
      const auto w = connected(*d, a, c);
      b.data()["query"] = {{"from", a.to_string()}, {"to", c.to_string()}, {"connected", w.has_value()}};
      if (w) {
        b.data()["query"]["witness"] = b.witness_json(*w);
        flagged = w->ends_outside_lambda;
      }
    } else {
      b.data()["classes"] = b.classes_json(*d, connection_classes(*d), flagged);
    }
    b.data()["ends_outside_lambda_exercised"] = flagged;
    return b.report();
  }
  const auto p = b.partition_stage(*d);
  if (!p.maximal_length || p.partial()) {
    b.data()["neg_I"] = {{"error", "graded connections need a maximal-length partition"}};
    b.fail();
    return b.report();
  }
  if (q.from) {
    const auto a = parse_graded_root(f, *q.from);
    const auto c = parse_graded_root(f, *q.to);
    const auto w = neg_I_connected(*d, p, a, c, q.upsilon);
    b.data()["query"] = {{"from", a.to_string()},
                         {"to", c.to_string()},
                         {"upsilon", to_string(q.upsilon)},
                         {"connected", w.has_value()}};
    if (w) b.data()["query"]["witness"] = b.graded_witness_json(*w);
  } else {
    b.data()["neg_I"] = b.summary_json(neg_I_connectivity_summary(*d, p), true);
  }
  return b.report();
}

Report decompose_report(AlgebraDocument doc) {
  Builder b(std::move(doc), "decompose");
  if (!b.validate_stage()) return b.report();
  const auto d = b.split_stage();
  if (!d) return b.report();
  try {
    b.data()["decomposition"] = b.decomposition_json(decompose(*d));
  } catch (const VerificationError& e) {
    b.data()["decomposition"] = {{"error", e.what()}};
    b.fail();
  }
  return b.report();
}

Report analyze_report(AlgebraDocument doc, const AnalyzeOptions& opt) {
  Builder b(std::move(doc), "analyze");
  auto& out = b.data();
  out["notes"] = json::array({"ideal list {0, frak_I, L} is treated as a set, so frak_I = 0 or frak_I = L is allowed"});
  out["verdict"] = "Undetermined";
  const auto finish = [&](Verdict v) {
    out["verdict"] = to_string(v);
    if (opt.expect_simple && v != Verdict::Simple) b.fail();
    return b.report();
  };
  if (!b.validate_stage()) return finish(Verdict::Undetermined);
  const auto d = b.split_stage();
  if (!d) return finish(Verdict::Undetermined);
  const auto p = b.partition_stage(*d);
  try {
    bool flagged = false;
    out["classes"] = b.classes_json(*d, connection_classes(*d, opt.exec), flagged);
    out["ends_outside_lambda_exercised"] = flagged;
    out["decomposition"] = b.decomposition_json(decompose(*d, opt.exec));
  } catch (const VerificationError& e) {
    out["decomposition"] = {{"error", e.what()}};
    b.fail();
  }
  if (!p.maximal_length || p.partial()) {
    out["theorem"] = {{"verdict", "Undetermined"}, {"failed_hypothesis", "maximal length"}};
    out["oracle"] = {{"verdict", "Undetermined"}, {"reason", "not of maximal length"}};
    return finish(Verdict::Undetermined);
  }

  const auto hyp = hypothesis_report(*d, p);
  const auto conn = neg_I_connectivity_summary(*d, p);
  out["hypotheses"] = hypotheses_json(hyp);
  out["neg_I"] = b.summary_json(conn, false);

  const auto t = simplicity_theorem_mode(*d, p, hyp, conn);
  json tj{{"verdict", to_string(t.verdict)}};
  if (!t.failed_hypothesis.empty()) tj["failed_hypothesis"] = t.failed_hypothesis;
  if (t.failing_pair) {
    tj["failing_pair"] = {{"from", t.failing_pair->from.to_string()},
                          {"to", t.failing_pair->to.to_string()},
                          {"upsilon", to_string(*t.failing_upsilon)}};
  }
  if (t.certificate) tj["certificate"] = b.space(*t.certificate);
  out["theorem"] = tj;

  std::optional<OracleVerdict> o;
  try {
    o = simplicity_oracle(*d, p, opt.oracle_bound, opt.exec);
  } catch (const OracleBoundExceeded& e) {
    out["oracle"] = {{"verdict", "Undetermined"}, {"reason", e.what()}};
  }
  if (o) {
    json ideals = json::array();
    for (const auto& i : o->ideals) ideals.push_back(b.space(i));
    json oj{{"verdict", to_string(o->verdict)},
            {"reason", o->reason},
            {"candidates", o->candidates},
            {"lattice_size", o->lattice_size},
            {"slot_count", o->slot_count},
            {"complete", o->complete},
            {"ideals", ideals}};
    if (o->certificate) oj["certificate"] = b.space(*o->certificate);
    out["oracle"] = oj;

    const auto lemma = oracle_lemma_checks(*d, p, hyp, conn, o->ideals);
    out["lemma_checks"] = {{"ideals_checked", lemma.ideals_checked},
                           {"outside_H_plus_I_applies", lemma.outside_H_plus_I_applies},
                           {"inside_I_applies", lemma.inside_I_applies},
                           {"violations", lemma.violations}};
    if (!lemma.violations.empty()) b.fail();

    const auto failed = classification_preconditions(hyp, conn);
    if (failed.empty()) {
      const auto c = classify_small(*d, p, hyp, conn, *o);
      json cj{{"case", to_string(c.tag)}, {"char_K", c.char_K}, {"diagnostics", c.diagnostics}};
      if (c.I) cj["I"] = b.space(*c.I);
      if (c.K) cj["K"] = b.space(*c.K);
      out["classification"] = cj;
    } else {
      out["classification"] = {{"case", nullptr}, {"failed_preconditions", failed}};
    }
  }

  // Disagreement between determinate verdicts is a failed check.
  Verdict v = t.verdict;
  if (o && o->verdict != Verdict::Undetermined) {
    if (t.verdict != Verdict::Undetermined && t.verdict != o->verdict) {
      out["disagreement"] = true;
      b.fail();
    }
    v = o->verdict;
  }
  return finish(v);
}

std::string render_json(const json& report) { return report.dump(2) + "\n"; }

namespace {

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

bool is_flat(const json& j) {
  for (const auto& x : j) {
    if (x.is_structured()) return false;
  }
  return true;
}

void render(std::ostringstream& os, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_structured() && !value.empty() && !(value.is_array() && is_flat(value))) {
        os << pad << key << ":\n";
        render(os, value, indent + 2);
      } else if (value.is_array()) {
        os << pad << key << ": [";
        for (std::size_t i = 0; i < value.size(); ++i) os << (i ? ", " : "") << scalar_text(value[i]);
        os << "]\n";
      } else if (value.is_object()) {
        os << pad << key << ": {}\n";
      } else {
        os << pad << key << ": " << scalar_text(value) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& x : j) {
      if (x.is_structured() && !(x.is_array() && is_flat(x))) {
        os << pad << "-\n";
        render(os, x, indent + 2);
      } else if (x.is_array()) {
        os << pad << "- [";
        for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << scalar_text(x[i]);
        os << "]\n";
      } else {
        os << pad << "- " << scalar_text(x) << "\n";
      }
    }
  } else {
    os << pad << scalar_text(j) << "\n";
  }
}

}  // namespace

std::string render_human(const json& report) {
  std::ostringstream os;
  render(os, report, 0);
  return os.str();
}

}  // namespace sll
