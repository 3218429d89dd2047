#include "sll/examples.hpp"

#include <stdexcept>

namespace sll {

AlgebraDocument gen_example1(Field field) {
  if (field.characteristic() == 2) throw FieldError("example1 requires characteristic != 2");
  using enum Parity;
  AlgebraDocument doc{Superalgebra(field, {Even, Even, Even, Odd, Odd}), {}, {}};
  auto& a = doc.algebra;
  const auto set = [&](std::size_t i, std::size_t j, std::size_t k, long c) {
    a.set_constant(i, j, k, Scalar(field, c));
  };
  enum : std::size_t { u1, u2, u3, e1, e2 };
  set(u2, u1, u3, -1);
  set(u1, u2, u3, 1);
  set(u1, u3, u1, -2);
  set(u3, u1, u1, 2);
  set(u3, u2, u2, -2);
  set(u2, u3, u2, 2);
  set(e1, u2, e2, 1);
  set(e1, u3, e1, -1);
  set(e2, u1, e1, 1);
  set(e2, u3, e2, 1);
  doc.cartan.push_back(unit_vector(5, u3));
  doc.meta.name = "example1";
  doc.meta.basis = {"u1", "u2", "u3", "e1", "e2"};
  return doc;
}

AlgebraDocument gen_example2(int n, Field field) {
  if (n < 1) throw std::invalid_argument("example2 requires n >= 1");
  const auto un = static_cast<std::size_t>(n);
  std::vector<Parity> parity(3, Parity::Even);
  parity.resize(un + 4, Parity::Odd);
  AlgebraDocument doc{Superalgebra(field, parity), {}, {}};
  auto& a = doc.algebra;
  const auto set = [&](std::size_t i, std::size_t j, std::size_t k, long c) {
    if (c != 0) a.set_constant(i, j, k, Scalar(field, c));
  };
  constexpr std::size_t h = 0;
  constexpr std::size_t u = 1;
  constexpr std::size_t v = 2;
  const auto e = [](long k) { return static_cast<std::size_t>(3 + k); };
  set(u, h, u, 2);
  set(h, u, u, -2);
  set(v, h, v, -2);
  set(h, v, v, 2);
  set(u, v, h, 1);
  set(v, u, h, -1);
  for (long k = 0; k <= n; ++k) {
    set(e(k), h, e(k), n - 2 * k);
    if (k < n) set(e(k), v, e(k + 1), 1);
    if (k >= 1) set(e(k), u, e(k - 1), k * (k - n - 1));
  }
  doc.cartan.push_back(unit_vector(un + 4, h));
  doc.meta.name = "example2_n" + std::to_string(n);
  doc.meta.basis = {"h", "u", "v"};
  for (long k = 0; k <= n; ++k) doc.meta.basis.push_back("e" + std::to_string(k));
  return doc;
}

AlgebraDocument gen_abelian(Field field, const std::vector<Parity>& parity) {
  AlgebraDocument doc{Superalgebra(field, parity), {}, {}};
  for (std::size_t i = 0; i < parity.size(); ++i) doc.cartan.push_back(unit_vector(parity.size(), i));
  doc.meta.name = "abelian";
  return doc;
}

AlgebraDocument direct_sum(const AlgebraDocument& a, const AlgebraDocument& b) {
  AlgebraDocument out{Superalgebra::direct_sum(a.algebra, b.algebra), {}, {}};
  const std::size_t na = a.algebra.dim();
  const std::size_t n = out.algebra.dim();
  for (const auto& c : a.cartan) {
    Vector v = zero_vector(n);
    std::copy(c.begin(), c.end(), v.begin());
    out.cartan.push_back(std::move(v));
  }
  for (const auto& c : b.cartan) {
    Vector v = zero_vector(n);
    std::copy(c.begin(), c.end(), v.begin() + static_cast<std::ptrdiff_t>(na));
    out.cartan.push_back(std::move(v));
  }
  out.meta.name = a.meta.name + "+" + b.meta.name;
  if (!a.meta.basis.empty() && !b.meta.basis.empty()) {
    out.meta.basis = a.meta.basis;
    out.meta.basis.insert(out.meta.basis.end(), b.meta.basis.begin(), b.meta.basis.end());
  }
  return out;
}

AlgebraDocument change_basis(const AlgebraDocument& doc, const Matrix& p) {
  AlgebraDocument out{doc.algebra.change_basis(p), {}, doc.meta};
  out.meta.basis.clear();
  const Matrix pinv = inverse(p);
  for (const auto& c : doc.cartan) out.cartan.push_back(Superalgebra::transport(pinv, c));
  return out;
}

}  // namespace sll
