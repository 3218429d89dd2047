#include "sll/connect.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "sll/kernels.hpp"

namespace sll {

Root ConnectionWitness::total() const {
  Root t = chain.front();
  for (std::size_t i = 1; i < chain.size(); ++i) t = t + chain[i];
  return t;
}

namespace {

/// Λ ∪ -Λ, sorted, with an index.
struct SignedRoots {
  std::vector<Root> list;
  std::map<Root, std::size_t> index;

  explicit SignedRoots(const SplitDecomposition& d) {
    for (const auto& r : d.roots) {
      list.push_back(r.root);
      list.push_back(-r.root);
    }
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    for (std::size_t i = 0; i < list.size(); ++i) index.emplace(list[i], i);
  }

  [[nodiscard]] std::optional<std::size_t> find(const Root& r) const {
    auto it = index.find(r);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }

  /// Letters are the states themselves: every element of ±Λ may be appended.
  [[nodiscard]] kernels::SumGraph graph() const {
    kernels::SumGraph g;
    g.states = g.letters = list.size();
    g.next.assign(g.states * g.letters, -1);
    for (std::size_t s = 0; s < list.size(); ++s) {
      for (std::size_t l = 0; l < list.size(); ++l) {
        if (auto t = find(list[s] + list[l])) g.next[s * g.letters + l] = static_cast<std::int32_t>(*t);
      }
    }
    return g;
  }
};

void require_root(const SplitDecomposition& d, const Root& r) {
  if (r.values.size() != d.h0_basis.size() || !d.is_root(r)) {
    throw std::invalid_argument("'" + r.to_string() + "' is not a root");
  }
}

}  // namespace

std::optional<ConnectionWitness> connected(const SplitDecomposition& d, const Root& a, const Root& b) {
  require_root(d, a);
  require_root(d, b);
  const Root neg_b = -b;
  const auto finish = [&](std::vector<Root> chain) {
    ConnectionWitness w{std::move(chain), 1, false};
    if (w.total() != b) {
      w.sign = -1;
      w.ends_outside_lambda = !d.is_root(neg_b);
    }
    return w;
  };
  if (a == b || a == neg_b) return finish({a});

  const SignedRoots signed_roots(d);
  const auto g = signed_roots.graph();
  const std::size_t start = *signed_roots.find(a);
  const std::size_t goal1 = *signed_roots.find(b);
  const std::size_t goal2 = *signed_roots.find(neg_b);
  // parent[s] = (previous state, letter)
  std::vector<std::pair<std::ptrdiff_t, std::size_t>> parent(g.states, {-2, 0});
  parent[start] = {-1, 0};
  std::vector<std::size_t> queue{start};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t s = queue[head];
    for (std::size_t l = 0; l < g.letters; ++l) {
      const auto t = g.next[s * g.letters + l];
      if (t < 0 || parent[static_cast<std::size_t>(t)].first != -2) continue;
      const auto ut = static_cast<std::size_t>(t);
      parent[ut] = {static_cast<std::ptrdiff_t>(s), l};
      if (ut == goal1 || ut == goal2) {
        std::vector<Root> letters;
        for (std::size_t cur = ut; parent[cur].first != -1; cur = static_cast<std::size_t>(parent[cur].first)) {
          letters.push_back(signed_roots.list[parent[cur].second]);
        }
        letters.push_back(a);
        std::reverse(letters.begin(), letters.end());
        return finish(std::move(letters));
      }
      queue.push_back(ut);
    }
  }
  return std::nullopt;
}

std::vector<std::vector<Root>> connection_classes(const SplitDecomposition& d, Exec exec) {
  const auto roots = d.root_list();
  if (roots.empty()) return {};
  const SignedRoots signed_roots(d);
  std::vector<std::size_t> sources;
  for (const auto& r : roots) sources.push_back(*signed_roots.find(r));
  const auto reach = kernels::reachable_from(signed_roots.graph(), sources, exec);

  std::vector<std::size_t> parent(roots.size());
  std::iota(parent.begin(), parent.end(), 0);
  const auto root_of = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = 0; j < roots.size(); ++j) {
      const bool linked = reach[i][sources[j]] || reach[i][*signed_roots.find(-roots[j])];
      if (linked) {
        const auto ri = root_of(i);
        const auto rj = root_of(j);
        if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
      }
    }
  }
  std::map<std::size_t, std::vector<Root>> groups;
  for (std::size_t i = 0; i < roots.size(); ++i) groups[root_of(i)].push_back(roots[i]);
  std::vector<std::vector<Root>> out;
  for (auto& [_, g] : groups) out.push_back(std::move(g));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<Vector> space_basis(const RootSpace& s) {
  auto out = s.even.basis_vectors();
  for (auto& v : s.odd.basis_vectors()) out.push_back(std::move(v));
  return out;
}

std::string describe_failure(const ClosureFailure& f) {
  const std::string k = "b_" + std::to_string(f.basis_index);
  const std::string x = to_string(f.element);
  return (f.element_on_left ? "[" + x + ", " + k + "]" : "[" + k + ", " + x + "]") + " = " + to_string(f.product);
}

}  // namespace

ClassIdeal class_ideal(const SplitDecomposition& d, const std::vector<Root>& cls) {
  const auto& a = d.algebra;
  std::vector<Vector> h_gens;
  std::vector<Vector> v_gens;
  for (const auto& beta : cls) {
    const auto* s = d.find(beta);
    if (!s) throw std::invalid_argument("'" + beta.to_string() + "' is not a root");
    const auto xs = space_basis(*s);
    v_gens.insert(v_gens.end(), xs.begin(), xs.end());
    if (const auto* t = d.find(-beta)) {
      for (const auto& x : xs) {
        for (const auto& y : space_basis(*t)) {
          auto p = a.product(x, y);
          if (!is_zero(p)) h_gens.push_back(std::move(p));
        }
      }
    }
  }
  ClassIdeal out;
  out.roots = cls;
  out.h_part = GradedSubspace::hull(a.field(), a.grading(), h_gens);
  out.v_part = GradedSubspace::hull(a.field(), a.grading(), v_gens);
  out.ideal = out.h_part.sum(out.v_part);
  const std::string name = "class ideal of " + cls.front().to_string();
  if (!d.H.contains(out.h_part)) throw VerificationError(name + ": H-part leaves H");
  if (!is_subalgebra(a, out.ideal)) throw VerificationError(name + " is not a subalgebra");
  if (auto f = ideal_failure(a, out.ideal)) {
    throw VerificationError(name + " is not an ideal: " + describe_failure(*f));
  }
  return out;
}

ClassDecomposition decompose(const SplitDecomposition& d, Exec exec) {
  const auto& a = d.algebra;
  ClassDecomposition out;
  out.h_lambda = a.zero();
  for (const auto& cls : connection_classes(d, exec)) {
    out.classes.push_back(class_ideal(d, cls));
    out.h_lambda = out.h_lambda.sum(out.classes.back().h_part);
  }
  out.u = GradedSubspace::from_subspace(a.grading(), out.h_lambda.whole().complement_in(d.H.whole()));

  GradedSubspace total = out.u;
  std::size_t dim_sum = out.u.dim();
  for (const auto& c : out.classes) {
    total = total.sum(c.ideal);
    dim_sum += c.ideal.dim();
  }
  if (!(total == a.whole())) {
    throw VerificationError("U + sum of class ideals has dimension " + std::to_string(total.dim()) + " < " +
                            std::to_string(a.dim()));
  }
  for (std::size_t j = 0; j < out.classes.size(); ++j) {
    for (std::size_t k = 0; k < out.classes.size(); ++k) {
      if (j == k) continue;
      const auto p = product_space(a, out.classes[j].ideal, out.classes[k].ideal);
      if (!p.is_zero()) {
        throw VerificationError("product of the class ideals of " + out.classes[j].roots.front().to_string() +
                                " and " + out.classes[k].roots.front().to_string() + " is nonzero");
      }
    }
  }
  out.center_zero = center(a).is_zero();
  out.perfect = derived_subalgebra(a) == a.whole();
  out.direct_refinement_applies = out.center_zero && out.perfect;
  if (out.direct_refinement_applies) {
    if (!out.u.is_zero()) throw VerificationError("center is zero and algebra is perfect but U != 0");
    if (dim_sum != a.dim()) throw VerificationError("center is zero and algebra is perfect but the sum is not direct");
  }
  return out;
}

const char* to_string(Upsilon u) { return u == Upsilon::I ? "I" : "notI"; }

std::vector<GradedRoot> graded_roots(const RootPartition& p, Upsilon u) {
  const auto& sets = (u == Upsilon::I) ? p.lambda_I : p.lambda_notI;
  std::vector<GradedRoot> out;
  for (Parity par : {Parity::Even, Parity::Odd}) {
    for (const auto& r : sets[index(par)]) out.push_back({r, par});
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void require_maximal(const RootPartition& p) {
  if (!p.maximal_length || p.partial()) {
    throw std::invalid_argument("graded connections require a root partition of maximal length");
  }
}

bool in_upsilon(const RootPartition& p, const GradedRoot& r, Upsilon u) {
  return u == Upsilon::I ? p.in_I(r.root, r.parity) : p.in_notI(r.root, r.parity);
}

}  // namespace

std::optional<GradedConnectionWitness> neg_I_connected(const SplitDecomposition& d, const RootPartition& p,
                                                       const GradedRoot& a, const GradedRoot& b, Upsilon upsilon) {
  (void)d;
  require_maximal(p);
  for (const auto* e : {&a, &b}) {
    if (!in_upsilon(p, *e, upsilon)) {
      throw std::invalid_argument(e->to_string() + " is not in Lambda^" + to_string(upsilon));
    }
  }
  if (b.root == a.root || b.root == -a.root) return GradedConnectionWitness{{a}, upsilon, true};

  const auto states = graded_roots(p, upsilon);
  const auto letters = graded_roots(p, Upsilon::NotI);
  const auto state_index = [&](const GradedRoot& r) -> std::ptrdiff_t {
    auto it = std::lower_bound(states.begin(), states.end(), r);
    return (it != states.end() && *it == r) ? it - states.begin() : -1;
  };
  const auto start = static_cast<std::size_t>(state_index(a));
  const auto goal = static_cast<std::size_t>(state_index(b));
  std::vector<std::pair<std::ptrdiff_t, std::size_t>> parent(states.size(), {-2, 0});
  parent[start] = {-1, 0};
  std::vector<std::size_t> queue{start};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t s = queue[head];
    for (std::size_t l = 0; l < letters.size(); ++l) {
      const GradedRoot next{states[s].root + letters[l].root, states[s].parity + letters[l].parity};
      const auto t = state_index(next);
      if (t < 0 || parent[static_cast<std::size_t>(t)].first != -2) continue;
      const auto ut = static_cast<std::size_t>(t);
      parent[ut] = {static_cast<std::ptrdiff_t>(s), l};
      if (ut == goal) {
        GradedConnectionWitness w{{}, upsilon, false};
        for (std::size_t cur = ut; parent[cur].first != -1; cur = static_cast<std::size_t>(parent[cur].first)) {
          w.chain.push_back(letters[parent[cur].second]);
        }
        w.chain.push_back(a);
        std::reverse(w.chain.begin(), w.chain.end());
        return w;
      }
      queue.push_back(ut);
    }
  }
  return std::nullopt;
}

const ConnectivityEntry* ConnectivitySummary::first_failure(Upsilon u) const {
  for (const auto& e : entries(u)) {
    if (!e.witness) return &e;
  }
  return nullptr;
}

ConnectivitySummary neg_I_connectivity_summary(const SplitDecomposition& d, const RootPartition& p) {
  require_maximal(p);
  ConnectivitySummary out;
  for (Upsilon u : {Upsilon::I, Upsilon::NotI}) {
    const int ui = static_cast<int>(u);
    const auto rs = graded_roots(p, u);
    for (const auto& x : rs) {
      for (const auto& y : rs) {
        auto w = neg_I_connected(d, p, x, y, u);
        if (!w) out.all_connected[ui] = false;
        out.table[ui].push_back({x, y, std::move(w)});
      }
    }
  }
  return out;
}

}  // namespace sll
