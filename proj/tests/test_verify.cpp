#include <string>
#include <vector>

#include "doctest.h"
#include "qqkit/errors.hpp"
#include "qqkit/verify.hpp"
#include "support.hpp"

using namespace qq;

namespace {

const VerifyReport& corpus_report() {
  static const VerifyReport r = verify(qqtest::corpus());
  return r;
}

const FixtureResult& result(const std::string& name) {
  for (const auto& r : corpus_report().results)
    if (r.name == name) return r;
  throw std::runtime_error("no result " + name);
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("the corpus replays without failures") {
    const VerifyReport& r = corpus_report();
    CHECK(r.results.size() == qqtest::corpus().size());
    CHECK(qqtest::corpus().size() >= 50);
    for (const auto& fr : r.results) CHECK_MESSAGE(fr.status != VerifyStatus::fail, fr.name, ": ", fr.first_difference);
    CHECK(r.ok());
    CHECK(r.path_mismatches() == 0);
    CHECK(r.count(VerifyStatus::pass) > r.count(VerifyStatus::typo_flag));
  }

  TEST_CASE("known misprints are flagged, not passed") {
    CHECK(result("a1-weight-three-generic").status == VerifyStatus::typo_flag);
    CHECK(result("a1-weight-two-generic").status == VerifyStatus::pass);
    CHECK(result("bc2-fundamental-node1").status == VerifyStatus::pass);
  }

  TEST_CASE("a perturbed expectation fails exactly once") {
    std::vector<Fixture> corpus = qqtest::corpus();
    for (auto& f : corpus)
      if (f.name == "a2-w20-kr-q1") f.expected_terms = 7;
    VerifyReport r = verify(corpus);
    CHECK(r.count(VerifyStatus::fail) == 1);
    CHECK_FALSE(r.ok());
  }

  TEST_CASE("a perturbed transcription fails") {
    Fixture f = qqtest::fixture("a1-weight-two-generic");
    auto pos = f.latex.find("x_2");
    REQUIRE(pos != std::string::npos);
    f.latex.replace(pos, 3, "x_1");
    CHECK(run_fixture(f).status == VerifyStatus::fail);
  }

  TEST_CASE("order and results do not depend on threads") {
    VerifyReport one = verify(qqtest::corpus(), 1);
    const VerifyReport& many = corpus_report();
    REQUIRE(one.results.size() == many.results.size());
    for (std::size_t k = 0; k < one.results.size(); ++k) {
      CHECK(one.results[k].name == many.results[k].name);
      CHECK(one.results[k].status == many.results[k].status);
    }
  }

  TEST_CASE("fixture schema") {
    CHECK_THROWS_AS(fixture_from_json(R"({"name": "n", "quiver": "A1", "weights": {"1": 1},
                                          "latex": "Y", "surprise": 1})"),
                    ValidationError);
    CHECK_THROWS_AS(fixture_from_json(R"({"name": "n", "quiver": "A1", "weights": {"1": 1},
                                          "latex": "Y", "typo": "misprint"})"),
                    ValidationError);
  }

  TEST_CASE("reports") {
    const VerifyReport& r = corpus_report();
    std::string json = report_to_json(r);
    CHECK(json.find("a1-fundamental") != std::string::npos);
    CHECK(json.find("paper-typo-flag") != std::string::npos);
    std::string text = report_to_text(r);
    CHECK(text.find("a1-weight-three-generic") != std::string::npos);
  }

  TEST_CASE("tikz-cd parsing") {
    Fixture f = qqtest::fixture("a1-fundamental");
    LatexNames n = fixture_names(f, Quiver::builtin("A1"));
    TikzGraph g = parse_tikzcd("\\mathsf{Y}_{x} \\arrow[d, \"{x}\"] \\\\ \\frac{1}{\\mathsf{Y}_{xq}}", n);
    CHECK(g.nodes.size() == 2);
    REQUIRE(g.arrows.size() == 1);
    CHECK(g.arrows[0].from == g.nodes[0]);
  }
}
