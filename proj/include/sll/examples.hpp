#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sll/superalgebra.hpp"

namespace sll {

struct DocumentMeta {
  std::string name;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> basis;  // optional basis labels
};

/// An algebra with an optional Cartan subalgebra given by homogeneous vectors.
struct AlgebraDocument {
  Superalgebra algebra;
  std::vector<Vector> cartan;
  DocumentMeta meta;
};

/// 5-dim sl2-type algebra on u1, u2, u3 | e1, e2 with H = <u3>.
/// Requires characteristic != 2.
AlgebraDocument gen_example1(Field field = Field::rationals());

/// (n+4)-dim algebra on h, u, v | e0..en with H = <h>; n >= 1.
AlgebraDocument gen_example2(int n, Field field = Field::rationals());

/// Abelian algebra with H = whole algebra.
AlgebraDocument gen_abelian(Field field, const std::vector<Parity>& parity);

/// Direct sum; Cartan generators are concatenated with zero padding.
AlgebraDocument direct_sum(const AlgebraDocument& a, const AlgebraDocument& b);

/// Change of basis b'_i = sum_k P(k,i) b_k applied to the algebra and the Cartan vectors.
AlgebraDocument change_basis(const AlgebraDocument& doc, const Matrix& p);

}  // namespace sll
