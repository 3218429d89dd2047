#include "doctest.h"
#include "sll/connect.hpp"
#include "sll/examples.hpp"
#include "witness_check.hpp"

using namespace sll;
using sll::test::valid_connection;
using sll::test::valid_graded_connection;

namespace {

Root r1(long v) { return Root{{Scalar(v)}}; }
Root r2(long a, long b) { return Root{{Scalar(a), Scalar(b)}}; }

SplitDecomposition split_doc(AlgebraDocument doc) {
  REQUIRE(validate(doc.algebra).empty());
  return split(doc.algebra, {doc.cartan});
}

AlgebraDocument two_blocks() { return direct_sum(gen_example1(), gen_example1()); }

// Extensional relation from single-pair queries.
void check_equivalence_laws(const SplitDecomposition& d) {
  const auto roots = d.root_list();
  const std::size_t m = roots.size();
  std::vector<std::vector<bool>> rel(m, std::vector<bool>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const auto w = connected(d, roots[i], roots[j]);
      rel[i][j] = w.has_value();
      if (w) CHECK(valid_connection(d, roots[i], roots[j], *w));
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    CHECK(rel[i][i]);
    for (std::size_t j = 0; j < m; ++j) {
      CHECK(rel[i][j] == rel[j][i]);
      for (std::size_t k = 0; k < m; ++k) {
        if (rel[i][j] && rel[j][k]) CHECK(rel[i][k]);
      }
    }
  }
  // classes agree with the extensional relation, serially and in parallel
  const auto classes = connection_classes(d, Exec::Serial);
  CHECK(classes == connection_classes(d, Exec::Parallel));
  for (const auto& cls : classes) {
    for (const auto& x : cls) {
      for (const auto& y : cls) {
        const auto ix = static_cast<std::size_t>(std::find(roots.begin(), roots.end(), x) - roots.begin());
        const auto iy = static_cast<std::size_t>(std::find(roots.begin(), roots.end(), y) - roots.begin());
        CHECK(rel[ix][iy]);
      }
      // closed under negation when the negative is a root
      if (d.is_root(-x)) CHECK(std::find(cls.begin(), cls.end(), -x) != cls.end());
    }
  }
  std::size_t total = 0;
  for (const auto& c : classes) total += c.size();
  CHECK(total == m);
}

}  // namespace

TEST_CASE("connections in example1") {
  const auto d = split_doc(gen_example1());
  const auto w = connected(d, r1(2), r1(-1));
  REQUIRE(w.has_value());
  CHECK(w->chain == std::vector<Root>{r1(2), r1(-1)});
  CHECK(w->sign == -1);
  CHECK_FALSE(w->ends_outside_lambda);
  CHECK(valid_connection(d, r1(2), r1(-1), *w));

  const auto self = connected(d, r1(2), r1(2));
  REQUIRE(self.has_value());
  CHECK(self->chain == std::vector<Root>{r1(2)});
  CHECK(self->sign == 1);

  CHECK_THROWS_AS((void)connected(d, r1(3), r1(2)), std::invalid_argument);

  const auto classes = connection_classes(d);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0] == d.root_list());
  check_equivalence_laws(d);
}

TEST_CASE("connections in example2") {
  for (int n : {1, 3, 5}) {
    const auto d = split_doc(gen_example2(n));
    CHECK(connection_classes(d).size() == 1);
    check_equivalence_laws(d);
  }
}

TEST_CASE("two separated blocks") {
  const auto d = split_doc(two_blocks());
  CHECK_FALSE(connected(d, r2(2, 0), r2(0, 2)).has_value());
  CHECK_FALSE(connected(d, r2(-1, 0), r2(0, 1)).has_value());
  const auto classes = connection_classes(d);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0].size() == 4);
  CHECK(classes[1].size() == 4);
  check_equivalence_laws(d);
}

TEST_CASE("a final sum outside Lambda is flagged") {
  // [x_k, h] = k x_k for k = 1, 2, 3: Λ = {1, 2, 3} has no negatives.
  Superalgebra a(Field::rationals(), std::vector<Parity>(4, Parity::Even));
  for (std::size_t k = 1; k <= 3; ++k) a.set_constant(k, 0, k, Scalar(static_cast<long>(k)));
  REQUIRE(validate(a).empty());
  const auto d = split(a, {{unit_vector(4, 0)}});
  REQUIRE(d.root_list() == std::vector<Root>{r1(1), r1(2), r1(3)});
  // letters are tried in ascending order, so 1 + (-3) = -2 is accepted first
  const auto w = connected(d, r1(1), r1(2));
  REQUIRE(w.has_value());
  CHECK(w->chain == std::vector<Root>{r1(1), r1(-3)});
  CHECK(w->sign == -1);
  CHECK(w->ends_outside_lambda);
  CHECK(valid_connection(d, r1(1), r1(2), *w));
  check_equivalence_laws(d);
}

TEST_CASE("class ideals and decomposition") {
  SUBCASE("example1") {
    const auto d = split_doc(gen_example1());
    const auto dec = decompose(d);
    REQUIRE(dec.classes.size() == 1);
    CHECK(dec.classes[0].h_part == d.H);
    CHECK(dec.classes[0].ideal == d.algebra.whole());
    CHECK(dec.classes[0].v_part.dim() == 4);
    CHECK(dec.u.is_zero());
    CHECK(dec.center_zero);
    CHECK(dec.perfect);
    CHECK(dec.direct_refinement_applies);
  }
  SUBCASE("example2 n=3") {
    const auto d = split_doc(gen_example2(3));
    const auto dec = decompose(d);
    REQUIRE(dec.classes.size() == 1);
    CHECK(dec.classes[0].h_part == d.H);
    CHECK(dec.classes[0].ideal == d.algebra.whole());
  }
  SUBCASE("abelian") {
    const auto d = split_doc(gen_abelian(Field::rationals(), {Parity::Even, Parity::Odd}));
    const auto dec = decompose(d);
    CHECK(dec.classes.empty());
    CHECK(dec.u == d.H);
    CHECK(dec.u == d.algebra.whole());
    CHECK_FALSE(dec.direct_refinement_applies);
  }
  SUBCASE("two blocks") {
    const auto d = split_doc(two_blocks());
    const auto dec = decompose(d);
    REQUIRE(dec.classes.size() == 2);
    CHECK(dec.u.is_zero());
    CHECK(dec.classes[0].ideal.dim() == 5);
    CHECK(dec.classes[1].ideal.dim() == 5);
    CHECK(product_space(d.algebra, dec.classes[0].ideal, dec.classes[1].ideal).is_zero());
    CHECK(product_space(d.algebra, dec.classes[1].ideal, dec.classes[0].ideal).is_zero());
    CHECK(dec.direct_refinement_applies);
  }
  SUBCASE("class without negatives has zero H-part") {
    using enum Parity;
    Superalgebra a(Field::rationals(), {Even, Even});
    a.set_constant(1, 0, 1, Scalar(3));
    REQUIRE(validate(a).empty());
    const auto d = split(a, {{unit_vector(2, 0)}});
    const auto ci = class_ideal(d, {r1(3)});
    CHECK(ci.h_part.is_zero());
    const auto dec = decompose(d);
    CHECK(dec.u == d.H);
  }
  SUBCASE("a set of roots that is not an ideal is rejected") {
    const auto d = split_doc(gen_example1());
    CHECK_THROWS_AS((void)class_ideal(d, {r1(2)}), VerificationError);
  }
}

TEST_CASE("graded connections") {
  using enum Parity;
  SUBCASE("example2 n=3") {
    const auto d = split_doc(gen_example2(3));
    const auto p = partition_roots(d, compute_frak_I(d.algebra));
    const GradedRoot b0{r1(3), Odd};
    const GradedRoot b1{r1(1), Odd};
    const auto w = neg_I_connected(d, p, b0, b1, Upsilon::I);
    REQUIRE(w.has_value());
    CHECK_FALSE(w->trivial);
    CHECK(w->chain == std::vector<GradedRoot>{b0, {r1(-2), Even}});
    CHECK(valid_graded_connection(p, b0, b1, *w));

    const GradedRoot b2{r1(-1), Odd};
    const auto w2 = neg_I_connected(d, p, b0, b2, Upsilon::I);
    REQUIRE(w2.has_value());
    CHECK(w2->chain == std::vector<GradedRoot>{b0, {r1(-2), Even}, {r1(-2), Even}});
    CHECK(valid_graded_connection(p, b0, b2, *w2));

    // beta_3 = -beta_0 falls under the trivial clause
    const GradedRoot b3{r1(-3), Odd};
    const auto w3 = neg_I_connected(d, p, b0, b3, Upsilon::I);
    REQUIRE(w3.has_value());
    CHECK(w3->trivial);

    CHECK_THROWS_AS((void)neg_I_connected(d, p, b0, {r1(2), Even}, Upsilon::I), std::invalid_argument);

    const auto s = neg_I_connectivity_summary(d, p);
    CHECK(s.holds(Upsilon::I));
    CHECK(s.holds(Upsilon::NotI));
    CHECK(s.entries(Upsilon::I).size() == 16);
    for (Upsilon u : {Upsilon::I, Upsilon::NotI}) {
      for (const auto& e : s.entries(u)) {
        REQUIRE(e.witness.has_value());
        CHECK(valid_graded_connection(p, e.from, e.to, *e.witness));
      }
    }
  }
  SUBCASE("example1") {
    const auto d = split_doc(gen_example1());
    const auto p = partition_roots(d, compute_frak_I(d.algebra));
    const auto w = neg_I_connected(d, p, {r1(2), Even}, {r1(-2), Even}, Upsilon::NotI);
    REQUIRE(w.has_value());
    CHECK(w->trivial);
    const auto s = neg_I_connectivity_summary(d, p);
    CHECK(s.holds(Upsilon::I));
    CHECK(s.holds(Upsilon::NotI));
  }
  SUBCASE("isolated frak-I root") {
    const auto d = split_doc(gen_example2(3));
    auto p = partition_roots(d, compute_frak_I(d.algebra));
    p.lambda_notI[0].clear();  // no letters left
    const auto s = neg_I_connectivity_summary(d, p);
    CHECK_FALSE(s.holds(Upsilon::I));
    const auto* f = s.first_failure(Upsilon::I);
    REQUIRE(f != nullptr);
    CHECK(f->from.root != f->to.root);
    CHECK(f->from.root != -f->to.root);
  }
}
