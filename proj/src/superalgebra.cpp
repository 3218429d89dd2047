#include "sll/superalgebra.hpp"

#include <algorithm>

#include "sll/kernels.hpp"

namespace sll {

Superalgebra::Superalgebra(Field field, std::vector<Parity> parity)
    : field_(field), grading_(std::move(parity)) {
  const std::size_t n = grading_.dim();
  table_.assign(n * n, Vector(n, Scalar(field_, 0)));
}

void Superalgebra::set_constant(std::size_t i, std::size_t j, std::size_t k, const Scalar& value) {
  const std::size_t n = dim();
  if (i >= n || j >= n || k >= n) {
    throw DimensionError("structure constant index (" + std::to_string(i) + ", " + std::to_string(j) +
                         ", " + std::to_string(k) + ") out of range for dimension " +
                         std::to_string(n));
  }
  table_[i * n + j][k] = value.in(field_);
  validated_ = false;
}

std::vector<StructureConstant> Superalgebra::constants() const {
  std::vector<StructureConstant> out;
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& v = basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (!v[k].is_zero()) out.push_back({i, j, k, v[k]});
      }
    }
  }
  return out;
}

Vector Superalgebra::product(std::span<const Scalar> x, std::span<const Scalar> y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) {
    throw DimensionError("product of vectors of length " + std::to_string(x.size()) + " and " +
                         std::to_string(y.size()) + " in algebra of dimension " + std::to_string(n));
  }
  Vector r(n, Scalar(field_, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      axpy(r, x[i] * y[j], basis_product(i, j));
    }
  }
  return r;
}

Superalgebra Superalgebra::change_basis(const Matrix& p) const {
  const std::size_t n = dim();
  if (p.rows() != n || p.cols() != n) throw DimensionError("change of basis has the wrong shape");
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (!p(r, c).is_zero() && grading_[r] != grading_[c]) {
        throw DimensionError("change of basis mixes even and odd coordinates");
      }
    }
  }
  const Matrix pinv = inverse(p);
  Superalgebra out(field_, grading_.parities());
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < n; ++c) cols.push_back(p.column(c));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.table_[i * n + j] = transport(pinv, product(cols[i], cols[j]));
    }
  }
  return out;
}

Vector Superalgebra::transport(const Matrix& p_inverse, std::span<const Scalar> v) {
  return p_inverse.apply(v);
}

Superalgebra Superalgebra::direct_sum(const Superalgebra& a, const Superalgebra& b) {
  if (a.field_ != b.field_) throw FieldError("direct sum of algebras over different fields");
  auto parities = a.grading_.parities();
  const auto& pb = b.grading_.parities();
  parities.insert(parities.end(), pb.begin(), pb.end());
  Superalgebra out(a.field_, parities);
  const std::size_t na = a.dim();
  for (const auto& c : a.constants()) out.set_constant(c.i, c.j, c.k, c.value);
  for (const auto& c : b.constants()) out.set_constant(na + c.i, na + c.j, na + c.k, c.value);
  return out;
}

std::string Violation::describe() const {
  const std::string triple =
      "(" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) + ")";
  if (kind == Kind::Grading) {
    return "grading violated: c_{" + std::to_string(i) + "," + std::to_string(j) + "}^" +
           std::to_string(k) + " is nonzero across parities";
  }
  return "super Leibniz identity fails on basis triple " + triple + ", residual " +
         sll::to_string(residual);
}

std::vector<Violation> find_violations(const Superalgebra& a, Exec exec) {
  std::vector<Violation> out;
  for (const auto& c : a.constants()) {
    if (a.parity(c.k) != a.parity(c.i) + a.parity(c.j)) {
      out.push_back({Violation::Kind::Grading, c.i, c.j, c.k, {}});
    }
  }
  auto ident = kernels::identity_violations(a, exec);
  out.insert(out.end(), std::make_move_iterator(ident.begin()), std::make_move_iterator(ident.end()));
  return out;
}

std::vector<Violation> validate(Superalgebra& a, Exec exec) {
  auto v = find_violations(a, exec);
  a.validated_ = v.empty();
  return v;
}

GradedSubspace product_space(const Superalgebra& a, const GradedSubspace& x, const GradedSubspace& y) {
  std::vector<Vector> prods;
  const auto bx = x.homogeneous_basis();
  const auto by = y.homogeneous_basis();
  for (const auto& u : bx) {
    for (const auto& w : by) {
      auto p = a.product(u.coords, w.coords);
      if (!is_zero(p)) prods.push_back(std::move(p));
    }
  }
  return GradedSubspace::hull(a.field(), a.grading(), prods);
}

GradedSubspace generated_ideal(const Superalgebra& a, const GradedSubspace& gens) {
  a.require_validated();
  const std::size_t n = a.dim();
  GradedSubspace w = gens;
  for (std::size_t iter = 0; iter <= n; ++iter) {
    std::vector<Vector> prods;
    for (const auto& v : w.homogeneous_basis()) {
      for (std::size_t k = 0; k < n; ++k) {
        const auto ek = unit_vector(n, k);
        auto l = a.product(v.coords, ek);
        auto r = a.product(ek, v.coords);
        if (!is_zero(l) && !w.contains(l)) prods.push_back(std::move(l));
        if (!is_zero(r) && !w.contains(r)) prods.push_back(std::move(r));
      }
    }
    if (prods.empty()) return w;
    w = w.sum(GradedSubspace::hull(a.field(), a.grading(), prods));
  }
  return w;
}

GradedSubspace compute_frak_I(const Superalgebra& a) {
  a.require_validated();
  const std::size_t n = a.dim();
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Vector g = a.basis_product(i, j);
      axpy(g, Scalar(a.field(), koszul_sign(a.parity(i), a.parity(j))), a.basis_product(j, i));
      if (!is_zero(g)) gens.push_back(std::move(g));
    }
  }
  return generated_ideal(a, GradedSubspace::hull(a.field(), a.grading(), gens));
}

bool check_eq1(const Superalgebra& a, const GradedSubspace& frak_i) {
  const std::size_t n = a.dim();
  for (const auto& w : frak_i.homogeneous_basis()) {
    for (std::size_t k = 0; k < n; ++k) {
      if (!is_zero(a.product(unit_vector(n, k), w.coords))) return false;
    }
  }
  return true;
}

bool check_eq1(const Superalgebra& a) { return check_eq1(a, compute_frak_I(a)); }

GradedSubspace two_sided_annihilator(const Superalgebra& a, const std::vector<HomogeneousVector>& ws) {
  const std::size_t n = a.dim();
  // Row block for each w: the matrices of v -> [v, w] and v -> [w, v].
  Matrix stacked(a.field(), 0, n);
  for (const auto& w : ws) {
    std::vector<Vector> right(n);
    std::vector<Vector> left(n);
    for (std::size_t c = 0; c < n; ++c) {
      const auto ec = unit_vector(n, c);
      right[c] = a.product(ec, w.coords);
      left[c] = a.product(w.coords, ec);
    }
    for (std::size_t r = 0; r < n; ++r) {
      Vector row_r(n);
      Vector row_l(n);
      for (std::size_t c = 0; c < n; ++c) {
        row_r[c] = right[c][r];
        row_l[c] = left[c][r];
      }
      if (!is_zero(row_r)) stacked.append_row(row_r);
      if (!is_zero(row_l)) stacked.append_row(row_l);
    }
  }
  return GradedSubspace::from_subspace(a.grading(), kernel(stacked));
}

GradedSubspace center(const Superalgebra& a) {
  a.require_validated();
  std::vector<HomogeneousVector> basis;
  for (std::size_t k = 0; k < a.dim(); ++k) basis.push_back({unit_vector(a.dim(), k), a.parity(k)});
  return two_sided_annihilator(a, basis);
}

GradedSubspace derived_subalgebra(const Superalgebra& a) {
  a.require_validated();
  std::vector<Vector> prods;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (!is_zero(a.basis_product(i, j))) prods.push_back(a.basis_product(i, j));
    }
  }
  return GradedSubspace::hull(a.field(), a.grading(), prods);
}

std::optional<ClosureFailure> ideal_failure(const Superalgebra& a, const GradedSubspace& s) {
  const std::size_t n = a.dim();
  for (const auto& v : s.homogeneous_basis()) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto ek = unit_vector(n, k);
      auto l = a.product(v.coords, ek);
      if (!s.contains(l)) return ClosureFailure{v.coords, k, true, std::move(l)};
      auto r = a.product(ek, v.coords);
      if (!s.contains(r)) return ClosureFailure{v.coords, k, false, std::move(r)};
    }
  }
  return std::nullopt;
}

bool is_subalgebra(const Superalgebra& a, const GradedSubspace& s) {
  const auto b = s.homogeneous_basis();
  for (const auto& x : b) {
    for (const auto& y : b) {
      if (!s.contains(a.product(x.coords, y.coords))) return false;
    }
  }
  return true;
}

}  // namespace sll
