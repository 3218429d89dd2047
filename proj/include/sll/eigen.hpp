#pragma once

#include <vector>

#include "sll/subspace.hpp"

namespace sll {

/// Coefficients of det(xI - m), highest degree first (monic, length n+1).
/// Division-free Berkowitz recurrence, valid over any field.
std::vector<Scalar> characteristic_polynomial(const Matrix& m);

/// Evaluates a polynomial given highest-degree-first coefficients.
Scalar evaluate(const std::vector<Scalar>& coeffs, const Scalar& x);

struct Eigenpair {
  Scalar value;
  Subspace space;  // true eigenspace kernel(m - value*I)
};

struct EigenDecomposition {
  std::vector<Eigenpair> pairs;  // ascending by eigenvalue
  std::size_t covered = 0;       // sum of eigenspace dimensions

  /// True when the eigenspaces span the whole space, i.e. m is diagonalizable over the field.
  [[nodiscard]] bool splits(std::size_t n) const { return covered == n; }
};

/// Every eigenvalue of the square matrix m lying in its base field, each with its
/// eigenspace. Over Q candidates come from the rational root theorem applied to
/// the primitive integer characteristic polynomial; over F_p every residue is tried.
EigenDecomposition rational_eigenvalues(const Matrix& m);

}  // namespace sll
