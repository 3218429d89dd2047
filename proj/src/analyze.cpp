#include "sll/analyze.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "sll/kernels.hpp"

namespace sll {

namespace {

constexpr std::array<Parity, 2> kParities{Parity::Even, Parity::Odd};

GradedSubspace graded(const SplitDecomposition& d, const Subspace& s) {
  return GradedSubspace::from_subspace(d.algebra.grading(), s);
}

GradedSubspace graded_slot(const SplitDecomposition& d, const Root& r, Parity p) {
  return graded(d, d.slot_space(r, p));
}

bool product_nonzero(const Superalgebra& a, const Subspace& x, const Subspace& y) {
  for (const auto& u : x.basis_vectors()) {
    for (const auto& w : y.basis_vectors()) {
      if (!is_zero(a.product(u, w))) return true;
    }
  }
  return false;
}

GradedSubspace bracket(const SplitDecomposition& d, const Subspace& x, const Subspace& y) {
  return product_space(d.algebra, graded(d, x), graded(d, y));
}

bool in_lambda_I(const RootPartition& p, const Root& r) { return p.in_I(r, Parity::Even) || p.in_I(r, Parity::Odd); }

void require_maximal(const RootPartition& p) {
  if (!p.maximal_length || p.partial()) throw std::invalid_argument("root partition is not of maximal length");
}

}  // namespace

RootMultiplicativity root_multiplicative(const SplitDecomposition& d, const RootPartition& p) {
  require_maximal(p);
  RootMultiplicativity out;
  const auto notI = graded_roots(p, Upsilon::NotI);
  const auto inI = graded_roots(p, Upsilon::I);
  for (const auto& a : notI) {
    for (const auto& b : notI) {
      if (!d.is_root(a.root + b.root)) continue;
      if (!product_nonzero(d.algebra, d.slot_space(a.root, a.parity), d.slot_space(b.root, b.parity))) {
        out.violations.push_back({1, a, b});
      }
    }
  }
  for (const auto& a : notI) {
    for (const auto& g : inI) {
      if (!in_lambda_I(p, a.root + g.root)) continue;
      if (!product_nonzero(d.algebra, d.slot_space(g.root, g.parity), d.slot_space(a.root, a.parity))) {
        out.violations.push_back({2, g, a});
      }
    }
  }
  out.holds = out.violations.empty();
  return out;
}

GradedSubspace lie_annihilator(const SplitDecomposition& d, const RootPartition& p) {
  std::vector<HomogeneousVector> ws;
  for (const auto& r : d.roots) {
    if (in_lambda_I(p, r.root)) continue;
    for (Parity par : kParities) {
      for (auto& v : r.part(par).basis_vectors()) ws.push_back({std::move(v), par});
    }
  }
  auto z = two_sided_annihilator(d.algebra, ws);
  if (!z.contains(center(d.algebra))) throw VerificationError("Lie-annihilator does not contain the center");
  return z;
}

GradedSubspace h_lambda(const SplitDecomposition& d) {
  GradedSubspace out = d.algebra.zero();
  for (const auto& r : d.roots) {
    if (!d.is_root(-r.root)) continue;
    for (Parity i : kParities) {
      for (Parity j : kParities) out = out.sum(bracket(d, r.part(i), d.slot_space(-r.root, j)));
    }
  }
  return out;
}

HypothesisReport hypothesis_report(const SplitDecomposition& d, const RootPartition& p) {
  HypothesisReport out;
  const auto& a = d.algebra;
  out.H_equals_H_Lambda = h_lambda(d) == d.H;
  out.center_zero = center(a).is_zero();
  out.lie_annihilator_zero = lie_annihilator(d, p).is_zero();
  out.perfect = derived_subalgebra(a) == a.whole();
  if (p.maximal_length && !p.partial()) {
    out.root_multiplicative = root_multiplicative(d, p);
  } else {
    out.root_multiplicative.holds = false;
  }
  out.card_notI = p.roots_notI().size();
  out.card_I = p.roots_I().size();

  out.eq11_applicable = out.H_equals_H_Lambda;
  if (out.eq11_applicable) {
    // H_0 from [L_{-a,k}, L_{a,k}], H_1 from [L_{-a,k+1}, L_{a,k}], over notI roots a of parity k.
    GradedSubspace parts[2] = {a.zero(), a.zero()};
    for (Parity k : kParities) {
      for (const auto& alpha : p.lambda_notI[index(k)]) {
        const auto la = d.slot_space(alpha, k);
        parts[0] = parts[0].sum(bracket(d, d.slot_space(-alpha, k), la));
        parts[1] = parts[1].sum(bracket(d, d.slot_space(-alpha, k + Parity::Odd), la));
      }
    }
    out.eq11_holds = parts[0].whole() == d.H.even() && parts[1].whole() == d.H.odd();
  }
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Simple: return "Simple";
    case Verdict::NotSimple: return "NotSimple";
    case Verdict::Undetermined: return "Undetermined";
  }
  return "?";
}

TheoremVerdict simplicity_theorem_mode(const SplitDecomposition& d, const RootPartition& p,
                                       const HypothesisReport& hyp, const ConnectivitySummary& conn) {
  TheoremVerdict out;
  if (!p.maximal_length || p.partial()) {
    out.failed_hypothesis = "maximal length";
  } else if (!hyp.H_equals_H_Lambda) {
    out.failed_hypothesis = "H = H_Lambda";
  } else if (!hyp.lie_annihilator_zero) {
    out.failed_hypothesis = "Z_Lie = 0";
  } else if (!hyp.root_multiplicative.holds) {
    out.failed_hypothesis = "root-multiplicative";
  } else if (hyp.card_notI <= 2) {
    out.failed_hypothesis = "card_notI = " + std::to_string(hyp.card_notI);
  } else if (hyp.card_I <= 2) {
    out.failed_hypothesis = "card_I = " + std::to_string(hyp.card_I);
  }
  if (!out.failed_hypothesis.empty()) return out;

  if (conn.holds(Upsilon::I) && conn.holds(Upsilon::NotI)) {
    out.verdict = Verdict::Simple;
    return out;
  }
  out.verdict = Verdict::NotSimple;
  const Upsilon u = conn.holds(Upsilon::I) ? Upsilon::NotI : Upsilon::I;
  out.failing_upsilon = u;
  out.failing_pair = *conn.first_failure(u);
  const auto& a = d.algebra;
  for (const auto& s : d.slots()) {
    const auto gen = generated_ideal(a, graded(d, s.space));
    if (!gen.is_zero() && !(gen == p.frak_i) && !(gen == a.whole())) {
      out.certificate = gen;
      break;
    }
  }
  return out;
}

std::uint64_t default_oracle_bound() {
  if (const char* env = std::getenv("SLL_ORACLE_BOUND")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return std::uint64_t{1} << 20;
}

OracleVerdict simplicity_oracle(const SplitDecomposition& d, const RootPartition& p,
                                std::optional<std::uint64_t> bound, Exec exec) {
  require_maximal(p);
  const auto& a = d.algebra;
  const Field f = a.field();
  const std::size_t n = a.dim();
  const std::uint64_t limit = bound.value_or(default_oracle_bound());
  OracleVerdict out;

  // H-lattice: 0, sums of the bracket lines, and H.
  std::vector<Subspace> lines;
  for (const auto& r : d.roots) {
    const auto* neg = d.find(-r.root);
    if (!neg) continue;
    for (Parity i : kParities) {
      for (Parity j : kParities) {
        for (const auto& x : r.part(i).basis_vectors()) {
          for (const auto& y : neg->part(j).basis_vectors()) {
            auto prod = a.product(x, y);
            if (is_zero(prod)) continue;
            auto line = Subspace::span(f, n, {prod});
            if (std::find(lines.begin(), lines.end(), line) == lines.end()) lines.push_back(std::move(line));
          }
        }
      }
    }
  }
  constexpr std::size_t kMaxLattice = 64;
  std::vector<GradedSubspace> lattice{a.zero()};
  const auto add_lattice = [&](GradedSubspace s) {
    if (std::find(lattice.begin(), lattice.end(), s) != lattice.end()) return;
    if (lattice.size() == kMaxLattice) {
      throw OracleBoundExceeded("H-lattice exceeds " + std::to_string(kMaxLattice) + " elements");
    }
    lattice.push_back(std::move(s));
  };
  for (const auto& line : lines) {
    const auto snapshot = lattice;
    for (const auto& e : snapshot) add_lattice(e.sum(graded(d, line)));
  }
  add_lattice(d.H);
  std::sort(lattice.begin(), lattice.end());

  const auto slots = d.slots();
  out.slot_count = slots.size();
  out.lattice_size = lattice.size();
  out.complete = d.H.dim() <= 1;
  if (slots.size() > 62) throw OracleBoundExceeded("too many root slots: " + std::to_string(slots.size()));
  out.candidates = static_cast<std::uint64_t>(lattice.size()) << slots.size();
  if (out.candidates > limit) {
    throw OracleBoundExceeded("oracle needs " + std::to_string(out.candidates) + " candidates, bound is " +
                              std::to_string(limit));
  }

  // Coordinates against the basis H ⊕ slots; owner[c] is the slot of coordinate c, or -1 for H.
  Matrix basis(f, n, n);
  std::vector<std::ptrdiff_t> owner;
  std::size_t col = 0;
  const auto put = [&](const Vector& v, std::ptrdiff_t who) {
    for (std::size_t r = 0; r < n; ++r) basis(r, col) = v[r];
    owner.push_back(who);
    ++col;
  };
  for (const auto& hv : d.H.homogeneous_basis()) put(hv.coords, -1);
  for (std::size_t s = 0; s < slots.size(); ++s) {
    for (const auto& v : slots[s].space.basis_vectors()) put(v, static_cast<std::ptrdiff_t>(s));
  }
  if (col != n) throw VerificationError("H and the root slots do not span the algebra");
  const Matrix to_coords = inverse(basis);

  const auto decompose = [&](const Vector& v, std::uint64_t& touched, Vector& h_part) {
    const Vector c = to_coords.apply(v);
    touched = 0;
    h_part = zero_vector(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (c[k].is_zero()) continue;
      if (owner[k] < 0) {
        axpy(h_part, c[k], basis.column(k));
      } else {
        touched |= std::uint64_t{1} << owner[k];
      }
    }
  };
  const auto lattice_mask = [&](const Vector& h_part) {
    std::uint64_t mask = 0;
    for (std::size_t l = 0; l < lattice.size(); ++l) {
      if (lattice[l].contains(h_part)) mask |= std::uint64_t{1} << l;
    }
    return mask;
  };
  const auto products_of = [&](const Vector& x) {
    std::vector<Vector> out_products;
    for (std::size_t k = 0; k < n; ++k) {
      const auto ek = unit_vector(n, k);
      auto l = a.product(x, ek);
      if (!is_zero(l)) out_products.push_back(std::move(l));
      auto r = a.product(ek, x);
      if (!is_zero(r)) out_products.push_back(std::move(r));
    }
    return out_products;
  };

  kernels::OracleTables tables;
  tables.slot_count = slots.size();
  tables.lattice_size = lattice.size();
  tables.slot_requires.resize(slots.size());
  for (std::size_t s = 0; s < slots.size(); ++s) {
    std::set<std::pair<std::uint64_t, std::uint64_t>> reqs;
    for (const auto& x : slots[s].space.basis_vectors()) {
      for (const auto& v : products_of(x)) {
        std::uint64_t touched = 0;
        Vector h_part;
        decompose(v, touched, h_part);
        reqs.insert({touched, is_zero(h_part) ? ~std::uint64_t{0} : lattice_mask(h_part)});
      }
    }
    for (const auto& [sl, lo] : reqs) tables.slot_requires[s].push_back({sl, lo});
  }
  constexpr std::uint64_t kImpossible = std::uint64_t{1} << 63;
  for (const auto& w : lattice) {
    std::uint64_t need = 0;
    for (const auto& hv : w.homogeneous_basis()) {
      for (const auto& v : products_of(hv.coords)) {
        std::uint64_t touched = 0;
        Vector h_part;
        decompose(v, touched, h_part);
        need |= touched;
        if (!w.contains(h_part)) need |= kImpossible;
      }
    }
    tables.lattice_requires.push_back(need);
  }

  const std::uint64_t subsets = std::uint64_t{1} << slots.size();
  for (const auto hit : kernels::oracle_scan(tables, exec)) {
    GradedSubspace ideal = lattice[hit / subsets];
    const std::uint64_t subset = hit % subsets;
    std::vector<Vector> vs;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if ((subset >> s) & 1U) {
        for (auto& v : slots[s].space.basis_vectors()) vs.push_back(std::move(v));
      }
    }
    ideal = ideal.sum(GradedSubspace::hull(f, a.grading(), vs));
    if (!is_ideal(a, ideal)) throw VerificationError("oracle accepted a subspace that is not an ideal");
    out.ideals.push_back(std::move(ideal));
  }
  std::sort(out.ideals.begin(), out.ideals.end());

  const auto whole = a.whole();
  const auto is_listed = [&](const GradedSubspace& s) { return s.is_zero() || s == p.frak_i || s == whole; };
  for (const auto& i : out.ideals) {
    if (!is_listed(i)) {
      out.verdict = Verdict::NotSimple;
      out.certificate = i;
      out.reason = "ideal of dimension " + std::to_string(i.dim()) + " outside {0, frak_I, L}";
      return out;
    }
  }
  if (derived_subalgebra(a).is_zero()) {
    out.verdict = Verdict::NotSimple;
    out.reason = "[L, L] = 0";
  } else if (out.complete) {
    out.verdict = Verdict::Simple;
    out.reason = "ideal set is {0, frak_I, L}";
  } else {
    out.verdict = Verdict::Undetermined;
    out.reason = "H-lattice incomplete (dim H = " + std::to_string(d.H.dim()) + ")";
  }
  return out;
}

LemmaReport oracle_lemma_checks(const SplitDecomposition& d, const RootPartition& p, const HypothesisReport& hyp,
                                const ConnectivitySummary& conn, const std::vector<GradedSubspace>& ideals) {
  LemmaReport out;
  const auto& a = d.algebra;
  const auto whole = a.whole();
  const auto h_plus_i = d.H.sum(p.frak_i);
  const auto z_lie = lie_annihilator(d, p);
  const bool base = hyp.H_equals_H_Lambda && hyp.root_multiplicative.holds;
  out.outside_H_plus_I_applies = base && conn.holds(Upsilon::NotI) && hyp.card_notI > 2;
  out.inside_I_applies = base && hyp.lie_annihilator_zero && conn.holds(Upsilon::I) && hyp.card_I > 2;
  const auto slots = d.slots();
  for (const auto& ideal : ideals) {
    ++out.ideals_checked;
    const std::string name = "ideal of dim " + std::to_string(ideal.dim());
    const auto in_h = ideal.intersect(d.H);
    std::size_t aligned = in_h.dim();
    for (const auto& s : slots) aligned += ideal.whole().intersect(s.space).dim();
    if (aligned != ideal.dim()) out.violations.push_back(name + " is not aligned with the root slots");
    if (h_plus_i.contains(ideal) && !z_lie.contains(in_h)) {
      out.violations.push_back(name + " inside H + frak_I meets H outside Z_Lie");
    }
    if (out.outside_H_plus_I_applies && !ideal.is_zero() && !h_plus_i.contains(ideal) && !(ideal == whole)) {
      out.violations.push_back(name + " is not inside H + frak_I but differs from L");
    }
    if (out.inside_I_applies && !ideal.is_zero() && p.frak_i.contains(ideal) && !(ideal == p.frak_i)) {
      out.violations.push_back(name + " is a nonzero ideal inside frak_I that differs from frak_I");
    }
  }
  return out;
}

const char* to_string(CaseTag t) {
  switch (t) {
    case CaseTag::Case1_Simple: return "Case1_Simple";
    case CaseTag::Case2i: return "Case2i";
    case CaseTag::Case2ii: return "Case2ii";
    case CaseTag::Case3: return "Case3";
    case CaseTag::Case4i: return "Case4i";
    case CaseTag::Case4ii: return "Case4ii";
    case CaseTag::Case4iii: return "Case4iii";
    case CaseTag::Unclassified: return "Unclassified";
  }
  return "?";
}

std::vector<std::string> classification_preconditions(const HypothesisReport& hyp, const ConnectivitySummary& conn) {
  std::vector<std::string> failed;
  if (!hyp.H_equals_H_Lambda) failed.emplace_back("H = H_Lambda");
  if (!hyp.lie_annihilator_zero) failed.emplace_back("Z_Lie = 0");
  if (!hyp.root_multiplicative.holds) failed.emplace_back("root-multiplicative");
  if (!conn.holds(Upsilon::I)) failed.emplace_back("Lambda^I connected");
  if (!conn.holds(Upsilon::NotI)) failed.emplace_back("Lambda^notI connected");
  if (hyp.card_notI > 2 && hyp.card_I > 2) failed.emplace_back("card_notI <= 2 or card_I <= 2");
  return failed;
}

namespace {

/// Template matching for the non-simple cases.
class Matcher {
 public:
  Matcher(const SplitDecomposition& d, const RootPartition& p) : d_(d), p_(p), a_(d.algebra) {
    for (const auto& s : d.slots()) {
      const bool i_side = p.in_I(s.key.root, s.key.parity);
      (i_side ? i_slots_ : noti_slots_).push_back(s);
    }
  }

  std::optional<ClassificationResult> match(const GradedSubspace& ideal) const {
    const bool char2 = a_.field().characteristic() == 2;
    if (!char2) {
      if (auto r = case2(ideal)) return r;
      if (auto r = case4(ideal)) return r;
    } else if (auto r = case3(ideal)) {
      return r;
    }
    return std::nullopt;
  }

 private:
  [[nodiscard]] GradedSubspace slot(const Root& r, Parity par) const { return graded_slot(d_, r, par); }

  [[nodiscard]] GradedSubspace i_slots_in(const GradedSubspace& ideal, bool inside) const {
    GradedSubspace out = a_.zero();
    for (const auto& s : i_slots_) {
      if (ideal.whole().contains(s.space) == inside) out = out.sum(graded(d_, s.space));
    }
    return out;
  }

  [[nodiscard]] GradedSubspace noti_slots() const {
    GradedSubspace out = a_.zero();
    for (const auto& s : noti_slots_) out = out.sum(graded(d_, s.space));
    return out;
  }

  [[nodiscard]] bool direct_whole(const std::vector<GradedSubspace>& parts) const {
    GradedSubspace sum = a_.zero();
    std::size_t dims = 0;
    for (const auto& s : parts) {
      sum = sum.sum(s);
      dims += s.dim();
    }
    return dims == a_.dim() && sum == a_.whole();
  }

  [[nodiscard]] ClassificationResult result(CaseTag tag, const GradedSubspace& i, const GradedSubspace& k) const {
    ClassificationResult r;
    r.tag = tag;
    r.I = i;
    r.K = k;
    r.char_K = a_.field().characteristic();
    return r;
  }

  [[nodiscard]] bool shape_ok(const GradedSubspace& i, const GradedSubspace& k) const {
    return is_ideal(a_, i) && is_subalgebra(a_, k);
  }

  [[nodiscard]] std::optional<ClassificationResult> case2(const GradedSubspace& ideal) const {
    if (!p_.frak_i.contains(ideal)) return std::nullopt;
    const auto rest = d_.H.sum(noti_slots());
    const auto check = [&](const GradedSubspace& k) {
      return k.dim() >= 1 && ideal.dim() + k.dim() == p_.frak_i.dim() && ideal.sum(k) == p_.frak_i &&
             direct_whole({d_.H, noti_slots(), ideal, k}) && shape_ok(ideal, k) && rest.dim() > 0;
    };
    for (const auto& g : p_.roots_I()) {
      if (!d_.is_root(-g)) continue;
      for (Parity i : kParities) {
        for (Parity j : kParities) {
          const auto a1 = slot(g, i);
          const auto a2 = slot(-g, j);
          if (a1.is_zero() || a2.is_zero()) continue;
          if (!(ideal == a1.sum(a2)) || ideal.dim() != 2) continue;
          const auto k = slot(g, i + Parity::Odd).sum(slot(-g, j + Parity::Odd));
          if (k.dim() <= 2 && check(k)) return result(CaseTag::Case2i, ideal, k);
        }
      }
      for (Parity i : kParities) {
        const auto t = slot(g, Parity::Even).sum(slot(g, Parity::Odd)).sum(slot(-g, i));
        if (!(ideal == t) || ideal.dim() != 3) continue;
        const auto k = slot(-g, i + Parity::Odd);
        if (k.dim() == 1 && check(k)) return result(CaseTag::Case2ii, ideal, k);
      }
    }
    return std::nullopt;
  }

  [[nodiscard]] std::optional<ClassificationResult> case3(const GradedSubspace& ideal) const {
    if (ideal.is_zero() || ideal == p_.frak_i) return std::nullopt;
    const auto inside = i_slots_in(ideal, true);
    const auto outside = i_slots_in(ideal, false);
    for (const auto& ar : graded_roots(p_, Upsilon::NotI)) {
      const auto la = d_.slot_space(ar.root, ar.parity);
      const auto lb = d_.slot_space(ar.root, ar.parity + Parity::Odd);
      if (lb.is_zero()) continue;
      const auto hpart = bracket(d_, la, lb).sum(bracket(d_, lb, la));
      const auto expect = hpart.sum(graded(d_, la)).sum(inside);
      if (!(ideal == expect)) continue;
      const auto k = bracket(d_, lb, lb).sum(graded(d_, lb));
      if (k.dim() == 2 && shape_ok(ideal, k) && direct_whole({ideal, k, outside})) {
        return result(CaseTag::Case3, ideal, k);
      }
    }
    return std::nullopt;
  }

  [[nodiscard]] GradedSubspace k_part(const GradedSubspace& ideal, const Root& alpha,
                                      const std::vector<std::pair<Parity, Parity>>& slot_pairs) const {
    // Σ [L_{εα,k}, L_{-εα,k'}] over ε = ±1 and the listed (k, k'), keeping the brackets that miss the ideal.
    GradedSubspace out = a_.zero();
    for (const Root& e : {alpha, -alpha}) {
      for (const auto& [k1, k2] : slot_pairs) {
        const auto b = bracket(d_, d_.slot_space(e, k1), d_.slot_space(-e, k2));
        if (b.intersect(ideal).is_zero()) out = out.sum(b);
      }
    }
    return out;
  }

  [[nodiscard]] std::optional<ClassificationResult> case4(const GradedSubspace& ideal) const {
    const auto inside = i_slots_in(ideal, true);
    const auto outside = i_slots_in(ideal, false);
    const auto h0 = graded(d_, d_.H.even());
    const auto h1 = graded(d_, d_.H.odd());
    const auto ideal_h0 = ideal.intersect(h0);
    const auto ideal_h1 = ideal.intersect(h1);
    for (const auto& ar : graded_roots(p_, Upsilon::NotI)) {
      const Root& al = ar.root;
      const Parity i = ar.parity;
      const Parity i1 = i + Parity::Odd;
      const auto a_i = slot(al, i);
      const auto m_i = slot(-al, i);
      const auto a_i1 = slot(al, i1);
      const auto m_i1 = slot(-al, i1);
      // (i)
      if (a_i.sum(a_i1).sum(m_i1).dim() == 3) {
        const auto ii = h1.sum(a_i).sum(inside);
        const auto kk = h0.sum(a_i1).sum(m_i1).sum(outside);
        if (ideal == ii && shape_ok(ii, kk) && direct_whole({ii, kk})) return result(CaseTag::Case4i, ii, kk);
      }
      if (a_i.sum(m_i).sum(a_i1).sum(m_i1).dim() != 4) continue;
      // (ii)
      {
        const auto ii = ideal_h0.sum(h1).sum(a_i).sum(m_i).sum(inside);
        const auto k0 = k_part(ideal, al, {{i1, i1}});
        const auto kk = k0.sum(a_i1).sum(m_i1).sum(outside);
        if (ideal == ii && shape_ok(ii, kk) && direct_whole({ii, kk})) return result(CaseTag::Case4ii, ii, kk);
      }
      // (iii)
      {
        const auto ii = ideal_h0.sum(ideal_h1).sum(a_i).sum(inside);
        std::vector<std::pair<Parity, Parity>> pairs;
        for (Parity k : kParities) {
          for (Parity j : kParities) pairs.emplace_back(k, k + j);
        }
        const auto kk = k_part(ideal, al, pairs).sum(m_i).sum(a_i1).sum(m_i1).sum(outside);
        if (ideal == ii && shape_ok(ii, kk) && direct_whole({ii, kk})) return result(CaseTag::Case4iii, ii, kk);
      }
    }
    return std::nullopt;
  }

  const SplitDecomposition& d_;
  const RootPartition& p_;
  const Superalgebra& a_;
  std::vector<Slot> i_slots_;
  std::vector<Slot> noti_slots_;
};

}  // namespace

ClassificationResult classify_small(const SplitDecomposition& d, const RootPartition& p, const HypothesisReport& hyp,
                                    const ConnectivitySummary& conn, const OracleVerdict& oracle, bool strict) {
  auto failed = classification_preconditions(hyp, conn);
  if (strict && !failed.empty()) {
    std::string msg = "classification preconditions fail:";
    for (const auto& f : failed) msg += " " + f + ";";
    throw PreconditionError(msg);
  }
  ClassificationResult out;
  if (oracle.verdict == Verdict::Simple) {
    out.tag = CaseTag::Case1_Simple;
  } else {
    const Matcher m(d, p);
    const auto whole = d.algebra.whole();
    for (const auto& ideal : oracle.ideals) {
      if (ideal.is_zero() || ideal == p.frak_i || ideal == whole) continue;
      if (auto r = m.match(ideal)) {
        out = std::move(*r);
        break;
      }
      out.diagnostics.push_back("ideal of dimension " + std::to_string(ideal.dim()) + " matches no template");
    }
    if (out.tag == CaseTag::Unclassified && oracle.ideals.size() <= 3) {
      out.diagnostics.push_back("oracle found no ideal outside {0, frak_I, L}: " + oracle.reason);
    }
  }
  out.char_K = d.algebra.field().characteristic();
  out.failed_preconditions = std::move(failed);
  return out;
}

}  // namespace sll
