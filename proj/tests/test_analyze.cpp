#include <cstdlib>

#include "doctest.h"
#include "fixtures.hpp"
#include "test_support.hpp"
#include "sll/analyze.hpp"
#include "sll/examples.hpp"

using namespace sll;

namespace {

Root r1(long v) { return Root{{Scalar(v)}}; }

struct Instance {
  SplitDecomposition d;
  RootPartition p;
  HypothesisReport hyp;
  ConnectivitySummary conn;
};

Instance analyze_doc(AlgebraDocument doc) {
  REQUIRE(validate(doc.algebra).empty());
  auto d = split(doc.algebra, {doc.cartan});
  auto p = partition_roots(d, compute_frak_I(d.algebra));
  auto hyp = hypothesis_report(d, p);
  auto conn = neg_I_connectivity_summary(d, p);
  return {std::move(d), std::move(p), std::move(hyp), std::move(conn)};
}

// Ideal test straight from the basis products, without the library's closure code.
bool coordinate_ideal(const Superalgebra& a, std::uint32_t mask) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (!((mask >> i) & 1U)) continue;
    for (std::size_t k = 0; k < n; ++k) {
      for (const auto& v : {a.basis_product(i, k), a.basis_product(k, i)}) {
        for (std::size_t c = 0; c < n; ++c) {
          if (!v[c].is_zero() && !((mask >> c) & 1U)) return false;
        }
      }
    }
  }
  return true;
}

GradedSubspace coordinate_span(const Superalgebra& a, std::uint32_t mask) {
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if ((mask >> i) & 1U) vs.push_back(unit_vector(a.dim(), i));
  }
  return GradedSubspace::hull(a.field(), a.grading(), vs);
}

// All ideals spanned by basis vectors, found by brute force.
std::vector<GradedSubspace> coordinate_ideals(const Superalgebra& a) {
  std::vector<GradedSubspace> out;
  for (std::uint32_t m = 0; m < (1U << a.dim()); ++m) {
    if (coordinate_ideal(a, m)) out.push_back(coordinate_span(a, m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("hypotheses for example1") {
  const auto in = analyze_doc(gen_example1());
  CHECK(in.hyp.H_equals_H_Lambda);
  CHECK(in.hyp.center_zero);
  CHECK(in.hyp.lie_annihilator_zero);
  CHECK(in.hyp.perfect);
  CHECK(in.hyp.root_multiplicative.holds);
  CHECK(in.hyp.card_notI == 2);
  CHECK(in.hyp.card_I == 2);
  CHECK(in.hyp.eq11_applicable);
  CHECK(in.hyp.eq11_holds);
  CHECK(h_lambda(in.d) == in.d.H);
}

TEST_CASE("hypotheses for example2") {
  for (int n : {1, 3, 5}) {
    CAPTURE(n);
    const auto in = analyze_doc(gen_example2(n));
    CHECK(in.hyp.H_equals_H_Lambda);
    CHECK(in.hyp.lie_annihilator_zero);
    CHECK(in.hyp.perfect);
    CHECK(in.hyp.root_multiplicative.holds);
    CHECK(in.hyp.card_notI == 2);
    CHECK(in.hyp.card_I == static_cast<std::size_t>(n + 1));
    CHECK(in.hyp.eq11_holds);
  }
}

TEST_CASE("abelian algebra has H_Lambda = 0") {
  const auto in = analyze_doc(gen_abelian(Field::rationals(), {Parity::Even, Parity::Odd}));
  CHECK(h_lambda(in.d).is_zero());
  CHECK_FALSE(in.hyp.H_equals_H_Lambda);
  CHECK_FALSE(in.hyp.center_zero);
  CHECK_FALSE(in.hyp.eq11_applicable);
  CHECK(in.hyp.eq11_holds);
  const auto t = simplicity_theorem_mode(in.d, in.p, in.hyp, in.conn);
  CHECK(t.verdict == Verdict::Undetermined);
  CHECK(t.failed_hypothesis == "H = H_Lambda");
}

TEST_CASE("root-multiplicativity fails for a Lie semidirect product") {
  const auto in = analyze_doc(test::lie_semidirect());
  CHECK(in.p.frak_i.is_zero());
  const auto& rm = in.hyp.root_multiplicative;
  CHECK_FALSE(rm.holds);
  // ±1 + ±1 = ±2 are roots but the module brackets vanish
  bool found = false;
  for (const auto& v : rm.violations) {
    CHECK(v.condition == 1);
    CHECK(in.d.is_root(v.left.root + v.right.root));
    if (v.left.root == r1(1) && v.right.root == r1(1)) found = true;
  }
  CHECK(found);
  const auto t = simplicity_theorem_mode(in.d, in.p, in.hyp, in.conn);
  CHECK(t.failed_hypothesis == "root-multiplicative");
}

TEST_CASE("removing [e1, u] from example2 breaks the identity") {
  auto doc = gen_example2(3);
  doc.algebra.set_constant(4, 1, 3, Scalar(0));
  const auto v = validate(doc.algebra);
  REQUIRE(v.size() == 4);
  CHECK(v[0].i == 3);
  CHECK(v[0].j == 1);
  CHECK(v[0].k == 2);
  CHECK(v[0].residual == test::vec({0, 0, 0, 3, 0, 0, 0}));
}

TEST_CASE("Lie-annihilator") {
  SUBCASE("no roots outside frak-I gives the whole algebra") {
    const auto in = analyze_doc(gen_abelian(Field::rationals(), {Parity::Even, Parity::Odd}));
    CHECK(lie_annihilator(in.d, in.p) == in.d.algebra.whole());
  }
  SUBCASE("contains the center of a sum with a line") {
    const auto in = analyze_doc(direct_sum(gen_example1(), gen_abelian(Field::rationals(), {Parity::Even})));
    const auto z = lie_annihilator(in.d, in.p);
    CHECK(z.contains(center(in.d.algebra)));
    CHECK(z.dim() == 1);
    CHECK_FALSE(in.hyp.lie_annihilator_zero);
    CHECK_FALSE(in.hyp.center_zero);
  }
  SUBCASE("sees elements killing only the notI part") {
    // e1, e2 are killed by nothing outside frak-I; u3 acts on u1, so Z_Lie = 0
    const auto in = analyze_doc(gen_example1());
    CHECK(lie_annihilator(in.d, in.p).is_zero());
  }
}

TEST_CASE("theorem mode") {
  SUBCASE("card_notI = 2 leaves example1 undetermined") {
    const auto in = analyze_doc(gen_example1());
    const auto t = simplicity_theorem_mode(in.d, in.p, in.hyp, in.conn);
    CHECK(t.verdict == Verdict::Undetermined);
    CHECK(t.failed_hypothesis == "card_notI = 2");
  }
  SUBCASE("example2") {
    const auto in = analyze_doc(gen_example2(3));
    const auto t = simplicity_theorem_mode(in.d, in.p, in.hyp, in.conn);
    CHECK(t.verdict == Verdict::Undetermined);
    CHECK(t.failed_hypothesis == "card_notI = 2");
  }
  SUBCASE("sums of example2 blocks are not simple") {
    for (int n : {1, 3}) {
      CAPTURE(n);
      const auto in = analyze_doc(direct_sum(gen_example2(n), gen_example2(n)));
      CHECK(in.hyp.card_notI == 4);
      const auto t = simplicity_theorem_mode(in.d, in.p, in.hyp, in.conn);
      REQUIRE(t.verdict == Verdict::NotSimple);
      REQUIRE(t.failing_pair.has_value());
      CHECK_FALSE(t.failing_pair->witness.has_value());
      REQUIRE(t.certificate.has_value());
      CHECK(is_ideal(in.d.algebra, *t.certificate));
      CHECK_FALSE(t.certificate->is_zero());
      CHECK_FALSE(*t.certificate == in.p.frak_i);
      CHECK_FALSE(*t.certificate == in.d.algebra.whole());

      const auto o = simplicity_oracle(in.d, in.p);
      CHECK(o.verdict == Verdict::NotSimple);
    }
  }
}

TEST_CASE("oracle on example1") {
  const auto in = analyze_doc(gen_example1());
  const auto o = simplicity_oracle(in.d, in.p);
  CHECK(o.slot_count == 4);
  CHECK(o.lattice_size == 2);
  CHECK(o.candidates == 32);
  CHECK(o.complete);
  CHECK(o.verdict == Verdict::Simple);
  const auto& a = in.d.algebra;
  const std::vector<GradedSubspace> expected{a.zero(), in.p.frak_i, a.whole()};
  CHECK(o.ideals == expected);
  CHECK(in.p.frak_i == coordinate_span(a, 0b11000));
  // one weight per basis vector and dim H = 1, so brute force over coordinate subspaces is exhaustive
  CHECK(o.ideals == coordinate_ideals(a));
}

TEST_CASE("oracle on example2") {
  for (int n : {1, 3}) {
    CAPTURE(n);
    const auto in = analyze_doc(gen_example2(n));
    const auto o = simplicity_oracle(in.d, in.p);
    CHECK(o.verdict == Verdict::Simple);
    CHECK(o.ideals == coordinate_ideals(in.d.algebra));
    CHECK(o.ideals.size() == 3);
  }
}

TEST_CASE("oracle on two example1 blocks") {
  const auto in = analyze_doc(direct_sum(gen_example1(), gen_example1()));
  const auto o = simplicity_oracle(in.d, in.p);
  CHECK(o.lattice_size == 4);
  CHECK(o.slot_count == 8);
  CHECK(o.candidates == 4U << 8U);
  CHECK_FALSE(o.complete);
  REQUIRE(o.verdict == Verdict::NotSimple);
  REQUIRE(o.certificate.has_value());
  CHECK(is_ideal(in.d.algebra, *o.certificate));
  // every coordinate ideal is of the enumerated shape here
  for (const auto& c : coordinate_ideals(in.d.algebra)) {
    CHECK(std::find(o.ideals.begin(), o.ideals.end(), c) != o.ideals.end());
  }
  const auto serial = simplicity_oracle(in.d, in.p, std::nullopt, Exec::Serial);
  CHECK(serial.ideals == o.ideals);
}

TEST_CASE("oracle bound") {
  const auto in = analyze_doc(gen_example1());
  CHECK_THROWS_AS((void)simplicity_oracle(in.d, in.p, 31), OracleBoundExceeded);
  CHECK_NOTHROW((void)simplicity_oracle(in.d, in.p, 32));
  ::setenv("SLL_ORACLE_BOUND", "16", 1);
  CHECK(default_oracle_bound() == 16);
  CHECK_THROWS_AS((void)simplicity_oracle(in.d, in.p), OracleBoundExceeded);
  ::setenv("SLL_ORACLE_BOUND", "junk", 1);
  CHECK(default_oracle_bound() == (1U << 20U));
  ::unsetenv("SLL_ORACLE_BOUND");
  CHECK(default_oracle_bound() == (1U << 20U));
}

TEST_CASE("oracle refuses non-maximal length") {
  const auto in = analyze_doc(gen_example1());
  auto p = in.p;
  p.maximal_length = false;
  CHECK_THROWS_AS((void)simplicity_oracle(in.d, p), std::invalid_argument);
}

TEST_CASE("lemma checks hold on every found ideal") {
  std::vector<AlgebraDocument> docs{gen_example1(), gen_example2(3), direct_sum(gen_example1(), gen_example1()),
                                    direct_sum(gen_example2(1), gen_example2(1)), test::doubled_module()};
  for (auto& doc : docs) {
    CAPTURE(doc.meta.name);
    const auto in = analyze_doc(doc);
    const auto o = simplicity_oracle(in.d, in.p);
    const auto r = oracle_lemma_checks(in.d, in.p, in.hyp, in.conn, o.ideals);
    CHECK(r.ideals_checked == o.ideals.size());
    CHECK(r.violations.empty());
  }
  SUBCASE("a non-aligned subspace is reported") {
    const auto in = analyze_doc(gen_example1());
    const auto& a = in.d.algebra;
    // u1 + u2 is not a sum of root vectors' spans
    const auto s = GradedSubspace::hull(a.field(), a.grading(), {test::vec({1, 1, 0, 0, 0})});
    const auto r = oracle_lemma_checks(in.d, in.p, in.hyp, in.conn, {s});
    CHECK_FALSE(r.violations.empty());
  }
}

TEST_CASE("classification") {
  SUBCASE("simple instances are case 1") {
    for (auto doc : {gen_example1(), gen_example2(1), gen_example2(3)}) {
      const auto in = analyze_doc(doc);
      CHECK(classification_preconditions(in.hyp, in.conn).empty());
      const auto o = simplicity_oracle(in.d, in.p);
      const auto c = classify_small(in.d, in.p, in.hyp, in.conn, o);
      CHECK(c.tag == CaseTag::Case1_Simple);
      CHECK(c.char_K == 0);
    }
  }
  SUBCASE("doubled module is case 2(i)") {
    const auto in = analyze_doc(test::doubled_module());
    CHECK(in.hyp.card_notI == 2);
    CHECK(in.hyp.card_I == 2);
    CHECK(classification_preconditions(in.hyp, in.conn).empty());
    const auto o = simplicity_oracle(in.d, in.p);
    REQUIRE(o.verdict == Verdict::NotSimple);
    const auto c = classify_small(in.d, in.p, in.hyp, in.conn, o);
    REQUIRE(c.tag == CaseTag::Case2i);
    const auto& a = in.d.algebra;
    // I and K are the even and odd copies of the plane, in either order
    const auto even = coordinate_span(a, 0b0011000);
    const auto odd = coordinate_span(a, 0b1100000);
    CHECK(((*c.I == even && *c.K == odd) || (*c.I == odd && *c.K == even)));
    CHECK(o.ideals.size() == 5);
    CHECK(is_ideal(a, *c.I));
    CHECK(is_subalgebra(a, *c.K));
  }
  SUBCASE("zeroed module products break the identity") {
    auto doc = test::zeroed_module();
    const auto v = validate(doc.algebra);
    REQUIRE_FALSE(v.empty());
    bool found = false;
    for (const auto& x : v) {
      if (x.kind == Violation::Kind::Identity && x.i == 3 && x.j == 0 && x.k == 1) {
        found = true;
        CHECK(x.residual == test::vec({0, 0, 0, -1, 0}));
      }
    }
    CHECK(found);
  }
  SUBCASE("preconditions") {
    const auto in = analyze_doc(direct_sum(gen_example2(3), gen_example2(3)));
    const auto o = simplicity_oracle(in.d, in.p);
    CHECK_THROWS_AS((void)classify_small(in.d, in.p, in.hyp, in.conn, o), PreconditionError);
    const auto c = classify_small(in.d, in.p, in.hyp, in.conn, o, false);
    CHECK_FALSE(c.failed_preconditions.empty());
    CHECK(c.tag == CaseTag::Unclassified);
    CHECK_FALSE(c.diagnostics.empty());
  }
}
