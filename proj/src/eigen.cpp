#include "sll/eigen.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

namespace sll {

std::vector<Scalar> characteristic_polynomial(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
  const Field f = m.field();
  const std::size_t n = m.rows();
  std::vector<Scalar> p{Scalar(f, 1)};
  for (std::size_t k = 0; k < n; ++k) {
    // Leading block A (k x k), row R = m[k][0..k), column C = m[0..k)[k], corner a = m[k][k].
    std::vector<Scalar> q;
    q.reserve(k + 2);
    q.push_back(Scalar(f, 1));
    q.push_back(-m(k, k));
    Vector c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = m(i, k);
    for (std::size_t step = 0; step < k; ++step) {
      Scalar rc(f, 0);
      for (std::size_t i = 0; i < k; ++i) rc += m(k, i) * c[i];
      q.push_back(-rc);
      Vector next(k, Scalar(f, 0));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          if (!m(i, j).is_zero() && !c[j].is_zero()) next[i] += m(i, j) * c[j];
        }
      }
      c = std::move(next);
    }
    // p_{k+1} = T p_k with T the (k+2) x (k+1) lower-triangular Toeplitz matrix of q.
    std::vector<Scalar> np(k + 2, Scalar(f, 0));
    for (std::size_t i = 0; i < k + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, k); ++j) np[i] += q[i - j] * p[j];
    }
    p = std::move(np);
  }
  return p;
}

Scalar evaluate(const std::vector<Scalar>& coeffs, const Scalar& x) {
  Scalar acc = coeffs.empty() ? Scalar(0) : Scalar(0) * x;
  for (const auto& c : coeffs) acc = acc * x + c;
  return acc;
}

namespace {

using Poly = std::vector<mpq_class>;  // highest degree first

void trim(Poly& p) {
  std::size_t lead = 0;
  while (lead + 1 < p.size() && sgn(p[lead]) == 0) ++lead;
  p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(lead));
}

/// Remainder of a by b (b nonzero, trimmed).
Poly remainder(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size() && !(a.size() == 1 && sgn(a[0]) == 0)) {
    const mpq_class factor = a[0] / b[0];
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= factor * b[i];
    a.erase(a.begin());
    trim(a);
    if (a.empty()) a.push_back(0);
  }
  return a;
}

bool is_zero_poly(const Poly& p) { return p.size() == 1 && sgn(p[0]) == 0; }

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!is_zero_poly(b)) {
    Poly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly quotient(Poly a, const Poly& b) {
  trim(a);
  Poly q;
  while (a.size() >= b.size()) {
    const mpq_class factor = a[0] / b[0];
    q.push_back(factor);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= factor * b[i];
    a.erase(a.begin());
  }
  return q.empty() ? Poly{0} : q;
}

Poly derivative(const Poly& p) {
  Poly d;
  const std::size_t deg = p.size() - 1;
  for (std::size_t i = 0; i < deg; ++i) d.push_back(p[i] * static_cast<unsigned long>(deg - i));
  return d.empty() ? Poly{0} : d;
}

mpq_class eval(const Poly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (const auto& c : p) acc = acc * x + c;
  return acc;
}

Poly deflate(const Poly& p, const mpq_class& root) {
  Poly q;
  mpq_class carry = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    carry = carry * root + p[i];
    q.push_back(carry);
  }
  return q;
}

/// Primitive integer coefficients of p (up to sign).
std::vector<mpz_class> integer_form(const Poly& p) {
  mpz_class lcm_den = 1;
  for (const auto& c : p) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> ints;
  mpz_class g = 0;
  for (const auto& c : p) {
    const mpq_class scaled = c * lcm_den;
    ints.push_back(scaled.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  for (auto& v : ints) v /= g;
  return ints;
}

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> small;
  std::vector<mpz_class> large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// One rational root of p (nonzero constant term), or nullopt. Numerator
/// candidates are generated lazily in increasing order, so small roots are found
/// without factoring the constant term.
std::optional<mpq_class> find_root(const Poly& p) {
  const auto ints = integer_form(p);
  mpz_class a0 = ints.back();
  if (a0 < 0) a0 = -a0;
  const auto dens = divisors(ints.front());
  const auto test = [&](const mpz_class& num) -> std::optional<mpq_class> {
    for (const auto& den : dens) {
      for (int sign : {1, -1}) {
        mpq_class cand(sign * num, den);
        cand.canonicalize();
        if (sgn(eval(p, cand)) == 0) return cand;
      }
    }
    return std::nullopt;
  };
  for (mpz_class d = 1; d * d <= a0; ++d) {
    if (a0 % d != 0) continue;
    if (auto r = test(d)) return r;
    if (auto r = test(a0 / d)) return r;
  }
  return std::nullopt;
}

/// Distinct rational roots of a polynomial with rational coefficients.
std::set<mpq_class> rational_roots(Poly poly) {
  std::set<mpq_class> roots;
  trim(poly);
  if (poly.size() <= 1) return roots;
  // Square-free part: repeated eigenvalues would inflate the constant term.
  const Poly g = gcd(poly, derivative(poly));
  if (g.size() > 1) poly = quotient(poly, g);
  if (sgn(poly.back()) == 0) {
    roots.insert(mpq_class(0));
    poly.pop_back();
  }
  while (poly.size() > 1) {
    const auto r = find_root(poly);
    if (!r) break;
    roots.insert(*r);
    poly = deflate(poly, *r);
  }
  return roots;
}

}  // namespace

EigenDecomposition rational_eigenvalues(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eigenvalues of non-square matrix");
  const Field f = m.field();
  const std::size_t n = m.rows();
  EigenDecomposition out;
  if (n == 0) return out;
  const auto cp = characteristic_polynomial(m);

  std::vector<Scalar> values;
  if (f.is_rational()) {
    std::vector<mpq_class> q;
    for (const auto& c : cp) q.push_back(c.rational());
    for (const auto& r : rational_roots(q)) values.emplace_back(f, r);
  } else {
    const std::uint64_t p = f.modulus();
    std::vector<std::uint64_t> coeffs;
    for (const auto& c : cp) coeffs.push_back(c.rational().get_num().get_ui());
    for (std::uint64_t x = 0; x < p; ++x) {
      std::uint64_t acc = 0;
      for (auto c : coeffs) acc = (acc * x + c) % p;
      if (acc == 0) values.emplace_back(f, static_cast<long>(x));
    }
  }
  std::sort(values.begin(), values.end());
  for (const auto& lambda : values) {
    Matrix shifted = m;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= lambda;
    Subspace space = kernel(shifted);
    out.covered += space.dim();
    out.pairs.push_back({lambda, std::move(space)});
  }
  return out;
}

}  // namespace sll
