#include "sll/splitdec.hpp"

#include <algorithm>
#include <sstream>

#include "sll/eigen.hpp"

namespace sll {

bool Root::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::string Root::to_string() const {
  if (values.size() == 1) return values[0].to_string();
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += values[i].to_string();
  }
  return out + ")";
}

Root Root::parse(Field field, std::string_view text) {
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw FieldError("unbalanced parenthesis in root '" + std::string(text) + "'");
    text = text.substr(1, text.size() - 2);
  }
  Root r;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    r.values.push_back(Scalar::parse(field, text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return r;
}

Root operator-(const Root& a) {
  Root r = a;
  for (auto& v : r.values) v = -v;
  return r;
}

Root operator+(const Root& a, const Root& b) {
  if (a.values.size() != b.values.size()) throw DimensionError("adding roots of different length");
  Root r = a;
  for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] += b.values[i];
  return r;
}

std::strong_ordering operator<=>(const Root& a, const Root& b) {
  return std::lexicographical_compare_three_way(a.values.begin(), a.values.end(), b.values.begin(),
                                                b.values.end());
}

std::string GradedRoot::to_string() const { return root.to_string() + "@" + sll::to_string(parity); }

std::strong_ordering operator<=>(const GradedRoot& a, const GradedRoot& b) {
  if (auto c = a.root <=> b.root; c != 0) return c;
  return index(a.parity) <=> index(b.parity);
}

const char* to_string(SplitError::Kind k) {
  switch (k) {
    case SplitError::Kind::NotAbelian: return "NotAbelian";
    case SplitError::Kind::NotGraded: return "NotGraded";
    case SplitError::Kind::NotSplit: return "NotSplit";
  }
  return "?";
}

const RootSpace* SplitDecomposition::find(const Root& r) const {
  auto it = std::lower_bound(roots.begin(), roots.end(), r,
                             [](const RootSpace& s, const Root& key) { return s.root < key; });
  return (it != roots.end() && it->root == r) ? &*it : nullptr;
}

std::vector<Root> SplitDecomposition::root_list() const {
  std::vector<Root> out;
  out.reserve(roots.size());
  for (const auto& r : roots) out.push_back(r.root);
  return out;
}

Subspace SplitDecomposition::slot_space(const Root& r, Parity p) const {
  if (r.is_zero()) return H.part(p);
  if (const auto* s = find(r)) return s->part(p);
  return Subspace(algebra.field(), algebra.dim());
}

std::vector<Slot> SplitDecomposition::slots() const {
  std::vector<Slot> out;
  for (const auto& r : roots) {
    for (Parity p : {Parity::Even, Parity::Odd}) {
      if (!r.part(p).is_zero()) out.push_back({{r.root, p}, r.part(p)});
    }
  }
  return out;
}

Root SplitDecomposition::zero_root() const {
  return Root{std::vector<Scalar>(h0_basis.size(), Scalar(algebra.field(), 0))};
}

namespace {

struct Piece {
  std::vector<Scalar> values;
  Subspace space;
};

/// Splits `space` (invariant under x -> [x,h]) into eigenspaces of that map.
/// Returns the pieces and the dimension they cover.
std::vector<Piece> refine(const Superalgebra& a, const Piece& piece, const Vector& h, std::size_t& covered) {
  const Field f = a.field();
  const auto basis = piece.space.basis_vectors();
  const auto& pivots = piece.space.pivots();
  const std::size_t d = basis.size();
  // Row r of m holds the coordinates of [b_r, h]; in RREF the coordinates are the pivot entries.
  Matrix m(f, d, d);
  for (std::size_t r = 0; r < d; ++r) {
    const Vector img = a.product(basis[r], h);
    for (std::size_t c = 0; c < d; ++c) m(r, c) = img[pivots[c]];
  }
  const auto eig = rational_eigenvalues(m.transpose());
  covered = eig.covered;
  std::vector<Piece> out;
  for (const auto& pair : eig.pairs) {
    std::vector<Vector> vs;
    for (const auto& coords : pair.space.basis_vectors()) {
      Vector v = zero_vector(a.dim());
      for (std::size_t r = 0; r < d; ++r) {
        if (!coords[r].is_zero()) axpy(v, coords[r], basis[r]);
      }
      vs.push_back(std::move(v));
    }
    Piece p{piece.values, Subspace::span(f, a.dim(), vs)};
    p.values.push_back(pair.value);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

SplitDecomposition split(const Superalgebra& a, const CartanInput& cartan) {
  a.require_validated();
  const Field f = a.field();
  const std::size_t n = a.dim();
  for (const auto& v : cartan.vectors) {
    if (v.size() != n) throw DimensionError("Cartan vector has the wrong length");
    if (!is_zero(v) && !a.grading().parity_of(v)) {
      throw SplitError(SplitError::Kind::NotGraded, "Cartan generator " + to_string(v) + " is not homogeneous",
                       {v});
    }
  }
  for (const auto& x : cartan.vectors) {
    for (const auto& y : cartan.vectors) {
      const auto p = a.product(x, y);
      if (!is_zero(p)) {
        throw SplitError(SplitError::Kind::NotAbelian,
                         "Cartan generators " + to_string(x) + " and " + to_string(y) +
                             " have nonzero product " + to_string(p),
                         {x, y, p});
      }
    }
  }

  SplitDecomposition d;
  d.algebra = a;
  d.H = GradedSubspace::hull(f, a.grading(), cartan.vectors);
  d.h0_basis = d.H.even().basis_vectors();

  std::vector<Piece> pieces{{{}, Subspace::full(f, n)}};
  for (const auto& h : d.h0_basis) {
    std::vector<Piece> next;
    for (const auto& piece : pieces) {
      std::size_t covered = 0;
      auto parts = refine(a, piece, h, covered);
      if (covered != piece.space.dim()) {
        std::ostringstream msg;
        msg << "right multiplication by " << to_string(h) << " is not diagonalizable over " << f.to_string()
            << " on a " << piece.space.dim() << "-dimensional joint eigenspace (eigenvectors cover " << covered
            << ")";
        throw SplitError(SplitError::Kind::NotSplit, msg.str(), piece.space.basis_vectors());
      }
      for (auto& p : parts) next.push_back(std::move(p));
    }
    pieces = std::move(next);
  }

  d.zero_space = GradedSubspace(f, n);
  for (auto& piece : pieces) {
    const Root r{piece.values};
    auto graded = GradedSubspace::from_subspace(a.grading(), piece.space);
    if (r.is_zero()) {
      d.zero_space = std::move(graded);
    } else {
      d.roots.push_back({r, graded.even(), graded.odd()});
    }
  }
  std::sort(d.roots.begin(), d.roots.end(), [](const RootSpace& x, const RootSpace& y) { return x.root < y.root; });

  if (!(d.zero_space == d.H)) {
    std::vector<Vector> witness;
    for (const auto& hv : d.zero_space.homogeneous_basis()) {
      if (!d.H.contains(hv.coords)) witness.push_back(hv.coords);
    }
    std::string names;
    for (const auto& w : witness) names += " " + to_string(w);
    throw SplitError(SplitError::Kind::NotSplit,
                     "zero root space has dimension " + std::to_string(d.zero_space.dim()) +
                         " but H has dimension " + std::to_string(d.H.dim()) + "; outside H:" + names,
                     witness);
  }
  return d;
}

std::string SplitFactViolation::describe() const {
  return "[L_{" + left.to_string() + "}, L_{" + right.to_string() + "}] contains " + to_string(product) +
         " outside L_{" + (left.root + right.root).to_string() + "}";
}

std::vector<SplitFactViolation> verify_split_facts(const SplitDecomposition& d) {
  const auto& a = d.algebra;
  std::vector<Slot> all;
  for (Parity p : {Parity::Even, Parity::Odd}) {
    if (!d.H.part(p).is_zero()) all.push_back({{d.zero_root(), p}, d.H.part(p)});
  }
  for (auto& s : d.slots()) all.push_back(std::move(s));
  std::sort(all.begin(), all.end(), [](const Slot& x, const Slot& y) { return x.key < y.key; });

  std::vector<SplitFactViolation> out;
  for (const auto& x : all) {
    const auto xb = x.space.basis_vectors();
    for (const auto& y : all) {
      const Subspace target = d.slot_space(x.key.root + y.key.root, x.key.parity + y.key.parity);
      for (const auto& u : xb) {
        for (const auto& w : y.space.basis_vectors()) {
          auto p = a.product(u, w);
          if (!target.contains(p)) {
            out.push_back({x.key, y.key, std::move(p)});
            goto next_pair;
          }
        }
      }
    next_pair:;
    }
  }
  return out;
}

bool RootPartition::in_I(const Root& r, Parity p) const {
  const auto& v = lambda_I[index(p)];
  return std::binary_search(v.begin(), v.end(), r);
}

bool RootPartition::in_notI(const Root& r, Parity p) const {
  const auto& v = lambda_notI[index(p)];
  return std::binary_search(v.begin(), v.end(), r);
}

namespace {

std::vector<Root> merged(const std::array<std::vector<Root>, 2>& parts) {
  std::vector<Root> out;
  std::set_union(parts[0].begin(), parts[0].end(), parts[1].begin(), parts[1].end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::vector<Root> RootPartition::roots_I() const { return merged(lambda_I); }
std::vector<Root> RootPartition::roots_notI() const { return merged(lambda_notI); }

RootPartition partition_roots(const SplitDecomposition& d, const GradedSubspace& frak_i) {
  RootPartition out;
  out.frak_i = frak_i;
  for (const auto& slot : d.slots()) {
    const auto p = slot.key.parity;
    if (slot.space.dim() > 1) out.maximal_length = false;
    const auto meet = frak_i.part(p).intersect(slot.space);
    if (meet.dim() == slot.space.dim()) {
      out.lambda_I[index(p)].push_back(slot.key.root);
    } else if (meet.is_zero()) {
      out.lambda_notI[index(p)].push_back(slot.key.root);
    } else {
      out.unclassifiable.push_back(slot.key);
    }
  }
  return out;
}

}  // namespace sll
