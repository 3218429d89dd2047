#include "doctest.h"
#include "sll/fuzz.hpp"
#include "sll/io.hpp"
#include "sll/report.hpp"

using namespace sll;

namespace {

std::string error_where(const std::string& text) {
  try {
    (void)parse_document(text);
  } catch (const DocumentError& e) {
    return e.where() + " | " + e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("example1 document") {
  const auto text = dump_document(gen_example1());
  const auto doc = parse_document(text);
  CHECK(doc.algebra.dim() == 5);
  CHECK(doc.algebra.grading().parities() ==
        std::vector<Parity>{Parity::Even, Parity::Even, Parity::Even, Parity::Odd, Parity::Odd});
  CHECK(doc.algebra.constants().size() == 10);
  const auto j = nlohmann::json::parse(text);
  CHECK(j.at("products").size() == 10);
  CHECK(j.at("field") == "Q");
  CHECK(dump_document(doc) == text);
}

TEST_CASE("abelian document from an empty product list") {
  const auto doc = parse_document(R"({"dim": 3, "field": "Q", "parity": [0, 1, 0], "products": []})");
  CHECK(doc.algebra.constants().empty());
  auto a = doc.algebra;
  CHECK(validate(a).empty());
  CHECK(doc.cartan.empty());
}

TEST_CASE("scalars and fields") {
  const auto doc = parse_document(
      R"({"dim": 2, "field": {"Fp": 7}, "parity": [0, 0], "products": [[0, 1, [[1, "10/4"]]], [1, 0, [[1, -3]]]]})");
  CHECK(doc.algebra.field() == Field::prime(7));
  // 10/4 = 5/2 = 5 * 4 = 6 mod 7
  CHECK(doc.algebra.basis_product(0, 1)[1] == Scalar(Field::prime(7), 6));
  CHECK(doc.algebra.basis_product(1, 0)[1] == Scalar(Field::prime(7), 4));
  const auto j = nlohmann::json::parse(dump_document(doc));
  CHECK(j.at("field") == nlohmann::json{{"Fp", 7}});
  CHECK(j.at("products")[0][2][0][1] == "6");

  const auto q = parse_document(
      R"({"dim": 2, "field": "Q", "parity": [0, 0], "products": [[0, 1, [[1, "-6/4"]]]]})");
  CHECK(nlohmann::json::parse(dump_document(q)).at("products")[0][2][0][1] == "-3/2");

  const auto over = parse_document(dump_document(gen_example1()), Field::prime(5));
  CHECK(over.algebra.field() == Field::prime(5));
  CHECK(over.algebra.basis_product(0, 2)[0] == Scalar(Field::prime(5), 3));  // -2 mod 5
}

TEST_CASE("diagnostics") {
  CHECK(error_where("{\n  \"dim\": 2,\n  oops\n}").starts_with("line 3, column 3"));
  CHECK(error_where(R"([1, 2])").starts_with("document"));
  CHECK(error_where(R"({"field": "Q", "parity": [], "products": []})").starts_with("dim"));
  CHECK(error_where(R"({"dim": 1, "field": "R", "parity": [0], "products": []})").starts_with("field"));
  CHECK(error_where(R"({"dim": 1, "field": {"Fp": 6}, "parity": [0], "products": []})").starts_with("field"));
  CHECK(error_where(R"({"dim": 2, "field": "Q", "parity": [0], "products": []})").starts_with("parity"));
  CHECK(error_where(R"({"dim": 1, "field": "Q", "parity": [2], "products": []})").starts_with("parity[0]"));
  CHECK(error_where(R"({"dim": 2, "field": "Q", "parity": [0, 0], "products": [[0, 2, []]]})")
            .starts_with("products[0][1]"));
  CHECK(error_where(R"({"dim": 2, "field": "Q", "parity": [0, 0], "products": [[0, 1, [[0, "1/0"]]]]})")
            .starts_with("products[0][2][0][1]"));
  CHECK(error_where(R"({"dim": 2, "field": "Q", "parity": [0, 0], "products": [[0, 1, []], [0, 1, []]]})")
            .starts_with("products[1]"));
  CHECK(error_where(R"({"dim": 1, "field": "Q", "parity": [0], "products": [], "extra": 1})").starts_with("extra"));
  CHECK(error_where(R"({"dim": 2, "field": "Q", "parity": [0, 1], "products": [], "cartan": [["1", "1"]]})")
            .starts_with("cartan[0]"));

  // [b0, b0] = b1 with b0 even and b1 odd breaks the grading
  const auto g = error_where(R"({"dim": 2, "field": "Q", "parity": [0, 1], "products": [[0, 0, [[1, "1"]]]]})");
  CHECK(g.starts_with("products[0][2][0]"));
  CHECK(g.find("(0, 0, 1)") != std::string::npos);
}

TEST_CASE("labels") {
  const std::vector<std::string> names{"u1", "u2", "e1"};
  CHECK(label_vector({Scalar(2), Scalar(0), Scalar(-1)}, names) == "2*u1 - e1");
  CHECK(label_vector({Scalar(0), Scalar(-1), Scalar(0)}, names) == "-u2");
  CHECK(label_vector({Scalar(0), Scalar(0), Scalar(0)}, names) == "0");
  CHECK(label_vector({Scalar(0), Scalar(1)}, {}) == "b1");
}

TEST_CASE("graded root syntax") {
  const auto r = parse_graded_root(Field::rationals(), "(3,-1/2)@1");
  CHECK(r.parity == Parity::Odd);
  CHECK(r.root.to_string() == "(3,-1/2)");
  CHECK_THROWS_AS((void)parse_graded_root(Field::rationals(), "3"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_graded_root(Field::rationals(), "3@2"), std::invalid_argument);
}

TEST_CASE("fuzz corpus round trip and determinism") {
  const auto a = fuzz_corpus(7, 12);
  const auto b = fuzz_corpus(7, 12);
  REQUIRE(a.size() == 12);
  std::size_t changed = 0;
  for (std::size_t m = 0; m < a.size(); ++m) {
    CAPTURE(a[m].provenance);
    const auto text = dump_document(a[m].doc);
    CHECK(text == dump_document(b[m].doc));
    CHECK(a[m].provenance == b[m].provenance);
    CHECK(dump_document(parse_document(text)) == text);
    auto alg = a[m].doc.algebra;
    CHECK(validate(alg).empty());
    if (a[m].basis_change) ++changed;
  }
  CHECK(changed > 0);
  CHECK(dump_document(fuzz_corpus(8, 1)[0].doc) != dump_document(a[0].doc));
  CHECK(fuzz_corpus(1, 1).size() == 1);
}

TEST_CASE("reports are deterministic") {
  const auto doc = direct_sum(gen_example1(), gen_example1());
  AnalyzeOptions serial;
  serial.exec = Exec::Serial;
  const auto r1 = analyze_report(doc, {});
  const auto r2 = analyze_report(doc, serial);
  CHECK(render_json(r1.data) == render_json(r2.data));
  CHECK(render_human(r1.data) == render_human(r2.data));
  CHECK(r1.data.at("verdict") == "NotSimple");
  CHECK(r1.exit_code == 0);

  AnalyzeOptions expect;
  expect.expect_simple = true;
  CHECK(analyze_report(doc, expect).exit_code == 1);
  CHECK(analyze_report(gen_example1(), expect).exit_code == 0);
}

TEST_CASE("report contents") {
  SUBCASE("example1") {
    const auto r = analyze_report(gen_example1(), {}).data;
    CHECK(r.at("schema") == kReportSchema);
    CHECK(r.at("oracle").at("verdict") == "Simple");
    CHECK(r.at("theorem").at("verdict") == "Undetermined");
    CHECK(r.at("theorem").at("failed_hypothesis") == "card_notI = 2");
    CHECK(r.at("classification").at("case") == "Case1_Simple");
  }
  SUBCASE("NotSplit names the witness") {
    const auto r = split_report(gen_example2(2));
    CHECK(r.exit_code == 1);
    CHECK(r.data.at("split").at("error").at("kind") == "NotSplit");
    CHECK(r.data.at("split").at("error").at("witness")[0].at("label") == "e1");
  }
  SUBCASE("check reports violations") {
    auto doc = gen_example1();
    doc.algebra.set_constant(0, 2, 0, Scalar(-1));
    const auto r = check_report(doc);
    CHECK(r.exit_code == 1);
    CHECK_FALSE(r.data.at("validation").at("violations").empty());
  }
  SUBCASE("oracle bound") {
    AnalyzeOptions o;
    o.oracle_bound = 8;
    const auto r = analyze_report(gen_example1(), o).data;
    CHECK(r.at("oracle").at("verdict") == "Undetermined");
    CHECK(r.at("verdict") == "Undetermined");
  }
  SUBCASE("connect queries") {
    ConnectQuery q;
    q.from = "2";
    q.to = "-1";
    const auto r = connect_report(gen_example1(), q).data;
    CHECK(r.at("query").at("connected") == true);
    CHECK(r.at("query").at("witness").at("chain") == nlohmann::json::array({"2", "-1"}));
    ConnectQuery g;
    g.graded = true;
    g.from = "3@1";
    g.to = "1@1";
    const auto rg = connect_report(gen_example2(3), g).data;
    CHECK(rg.at("query").at("witness").at("chain") == nlohmann::json::array({"3@1", "-2@0"}));
  }
  SUBCASE("a document without a Cartan is an input error") {
    auto doc = gen_example1();
    doc.cartan.clear();
    CHECK_THROWS_AS((void)split_report(doc), DocumentError);
  }
}
