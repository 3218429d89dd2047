#include "sll/graded.hpp"

namespace sll {

Grading::Grading(std::vector<Parity> parity) : parity_(std::move(parity)) {
  for (std::size_t i = 0; i < parity_.size(); ++i) axes_[index(parity_[i])].push_back(i);
}

std::pair<Vector, Vector> Grading::split(std::span<const Scalar> v) const {
  if (v.size() != dim()) throw DimensionError("vector length does not match the grading");
  Vector even(v.begin(), v.end());
  Vector odd(v.begin(), v.end());
  for (std::size_t i = 0; i < dim(); ++i) {
    (parity_[i] == Parity::Even ? odd : even)[i] = Scalar(0);
  }
  return {std::move(even), std::move(odd)};
}

std::optional<Parity> Grading::parity_of(std::span<const Scalar> v) const {
  if (v.size() != dim()) throw DimensionError("vector length does not match the grading");
  bool seen[2] = {false, false};
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!v[i].is_zero()) seen[index(parity_[i])] = true;
  }
  if (seen[0] == seen[1]) return std::nullopt;
  return seen[0] ? Parity::Even : Parity::Odd;
}

GradedSubspace::GradedSubspace(Field field, std::size_t ambient_dim)
    : even_(field, ambient_dim), odd_(field, ambient_dim), whole_(field, ambient_dim) {}

GradedSubspace::GradedSubspace(Subspace even, Subspace odd)
    : even_(std::move(even)), odd_(std::move(odd)), whole_(even_.sum(odd_)) {}

GradedSubspace::GradedSubspace(const Grading& grading, Subspace even, Subspace odd)
    : GradedSubspace(std::move(even), std::move(odd)) {
  for (std::size_t r = 0; r < even_.dim(); ++r) {
    if (grading.parity_of(even_.basis().row(r)) != Parity::Even) {
      throw DimensionError("even part of a graded subspace has odd support");
    }
  }
  for (std::size_t r = 0; r < odd_.dim(); ++r) {
    if (grading.parity_of(odd_.basis().row(r)) != Parity::Odd) {
      throw DimensionError("odd part of a graded subspace has even support");
    }
  }
}

GradedSubspace GradedSubspace::full(Field field, const Grading& grading) {
  return GradedSubspace(Subspace::coordinates(field, grading.dim(), grading.axes(Parity::Even)),
                        Subspace::coordinates(field, grading.dim(), grading.axes(Parity::Odd)));
}

GradedSubspace GradedSubspace::hull(Field field, const Grading& grading,
                                    const std::vector<Vector>& vectors) {
  std::vector<Vector> even;
  std::vector<Vector> odd;
  for (const auto& v : vectors) {
    auto [e, o] = grading.split(v);
    if (!sll::is_zero(e)) even.push_back(std::move(e));
    if (!sll::is_zero(o)) odd.push_back(std::move(o));
  }
  return GradedSubspace(Subspace::span(field, grading.dim(), even),
                        Subspace::span(field, grading.dim(), odd));
}

GradedSubspace GradedSubspace::from_subspace(const Grading& grading, const Subspace& s) {
  GradedSubspace g = hull(s.field(), grading, s.basis_vectors());
  if (g.dim() != s.dim()) throw DimensionError("subspace is not graded");
  return g;
}

std::vector<HomogeneousVector> GradedSubspace::homogeneous_basis() const {
  std::vector<HomogeneousVector> out;
  out.reserve(dim());
  for (auto& v : even_.basis_vectors()) out.push_back({std::move(v), Parity::Even});
  for (auto& v : odd_.basis_vectors()) out.push_back({std::move(v), Parity::Odd});
  return out;
}

GradedSubspace GradedSubspace::sum(const GradedSubspace& o) const {
  return GradedSubspace(even_.sum(o.even_), odd_.sum(o.odd_));
}

GradedSubspace GradedSubspace::intersect(const GradedSubspace& o) const {
  return GradedSubspace(even_.intersect(o.even_), odd_.intersect(o.odd_));
}

}  // namespace sll
