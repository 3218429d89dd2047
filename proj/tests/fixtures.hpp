#pragma once

// Small hand-built instances shared by the analyze and acceptance tests.

#include "sll/examples.hpp"

namespace sll::test {

/// sl2 acting on the right of a weight ±1 plane, with one even and one odd copy of the plane.
/// Basis u1, u2, u3, e1, e2 (even), f1, f2 (odd).
inline AlgebraDocument doubled_module(Field field = Field::rationals()) {
  using enum Parity;
  AlgebraDocument doc{Superalgebra(field, {Even, Even, Even, Even, Even, Odd, Odd}), {}, {}};
  auto& a = doc.algebra;
  const auto set = [&](std::size_t i, std::size_t j, std::size_t k, long c) {
    a.set_constant(i, j, k, Scalar(field, c));
  };
  enum : std::size_t { u1, u2, u3, e1, e2, f1, f2 };
  set(u2, u1, u3, -1);
  set(u1, u2, u3, 1);
  set(u1, u3, u1, -2);
  set(u3, u1, u1, 2);
  set(u3, u2, u2, -2);
  set(u2, u3, u2, 2);
  for (auto [x1, x2] : {std::pair{e1, e2}, std::pair{f1, f2}}) {
    set(x1, u2, x2, 1);
    set(x1, u3, x1, -1);
    set(x2, u1, x1, 1);
    set(x2, u3, x2, 1);
  }
  doc.cartan.push_back(unit_vector(7, u3));
  doc.meta.name = "doubled_module";
  return doc;
}

/// The Lie algebra sl2 ⋉ V with V the weight ±1 plane (all even, skew bracket).
inline AlgebraDocument lie_semidirect(Field field = Field::rationals()) {
  AlgebraDocument doc{Superalgebra(field, std::vector<Parity>(5, Parity::Even)), {}, {}};
  auto& a = doc.algebra;
  const auto skew = [&](std::size_t i, std::size_t j, std::size_t k, long c) {
    a.set_constant(i, j, k, Scalar(field, c));
    a.set_constant(j, i, k, Scalar(field, -c));
  };
  enum : std::size_t { u1, u2, u3, e1, e2 };
  skew(u1, u2, u3, 1);
  skew(u1, u3, u1, -2);
  skew(u2, u3, u2, 2);
  skew(e1, u2, e2, 1);
  skew(e1, u3, e1, -1);
  skew(e2, u1, e1, 1);
  skew(e2, u3, e2, 1);
  doc.cartan.push_back(unit_vector(5, u3));
  doc.meta.name = "lie_semidirect";
  return doc;
}

/// The 5-dim example with the products [e1, u2] and [e2, u1] removed. Not Leibniz.
inline AlgebraDocument zeroed_module() {
  auto doc = gen_example1();
  enum : std::size_t { u1, u2, u3, e1, e2 };
  doc.algebra.set_constant(e1, u2, e2, Scalar(0));
  doc.algebra.set_constant(e2, u1, e1, Scalar(0));
  doc.meta.name = "zeroed_module";
  return doc;
}

}  // namespace sll::test
