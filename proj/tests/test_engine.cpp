#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "qqkit/engine.hpp"
#include "qqkit/errors.hpp"
#include "qqkit/quiver.hpp"
#include "qqkit/serialize.hpp"
#include "support.hpp"

using namespace qq;

namespace {

Character generic(const char* quiver, std::vector<std::pair<std::string, int>> w, ExpandStats* stats = nullptr,
                  unsigned threads = 0) {
  Quiver q = Quiver::builtin(quiver);
  ExpandOptions opt;
  opt.stats = stats;
  opt.threads = threads;
  return expand(q, WeightConfig::generic(q, w), opt);
}

bool has_numerator(const YMonomial& ym) {
  for (const auto& [k, e] : ym.entries())
    if (e > 0) return true;
  return false;
}

void check_hasse_invariants(const Quiver& q, const Character& ch) {
  REQUIRE(!ch.terms.empty());
  CHECK(ch.terms[0].depth == 0);
  CHECK(ch.terms[0].coeff.equals(Coefficient::one()));
  std::vector<int> out(ch.size(), 0), in(ch.size(), 0);
  for (const auto& e : ch.edges) {
    REQUIRE(e.from < ch.size());
    REQUIRE(e.to < ch.size());
    const Term& from = ch.terms[e.from];
    const Term& to = ch.terms[e.to];
    CHECK(to.depth == from.depth + 1);
    CHECK(from.ym.exponent(e.label) > 0);
    CHECK(to.ym == from.ym * a_inverse_monomial(q, e.label.node, e.label.arg).monomial);
    ++out[e.from];
    ++in[e.to];
  }
  int sinks = 0;
  for (std::size_t t = 0; t < ch.size(); ++t) {
    CHECK((out[t] > 0) == has_numerator(ch.terms[t].ym));
    if (t > 0) CHECK(in[t] > 0);
    if (!has_numerator(ch.terms[t].ym)) ++sinks;
  }
  CHECK(sinks == 1);
}

}  // namespace

TEST_SUITE("engine") {
  TEST_CASE("A1 fundamental") {
    Character ch = generic("A1", {{"1", 1}});
    REQUIRE(ch.size() == 2);
    const Monomial x(Generator::x("1", 1));
    CHECK(ch.terms[1].ym == YMonomial(YKey{"1", x * Monomial::q()}, -1));
    CHECK(ch.terms[1].coeff.equals(Coefficient::one()));
    CHECK(ch.edges.size() == 1);
  }

  TEST_CASE("A1 expansion equals the subset-sum formula") {
    for (int w = 1; w <= 6; ++w) {
      ExpandStats stats;
      Character ch = generic("A1", {{"1", w}}, &stats);
      std::string why;
      CHECK_MESSAGE(same_terms(ch, closed_form_A1(qqtest::a1_params(w)), &why), why);
      CHECK(ch.size() == (std::size_t{1} << w));
      CHECK(stats.path_mismatches == 0);
    }
  }

  TEST_CASE("generic term and edge counts") {
    struct Case {
      const char* quiver;
      std::vector<std::pair<std::string, int>> w;
      std::size_t terms, edges;
    };
    const std::vector<Case> cases{{"A2", {{"1", 2}, {"2", 0}}, 9, 12},   {"A2", {{"1", 0}, {"2", 2}}, 9, 12},
                                  {"A2", {{"1", 1}, {"2", 1}}, 9, 12},   {"BC2", {{"1", 2}, {"2", 0}}, 25, 40},
                                  {"BC2", {{"1", 0}, {"2", 2}}, 16, 24}, {"BC2", {{"1", 1}, {"2", 1}}, 20, 31}};
    for (const auto& c : cases) {
      CAPTURE(c.quiver);
      CAPTURE(c.terms);
      ExpandStats stats;
      Character ch = generic(c.quiver, c.w, &stats);
      CHECK(ch.size() == c.terms);
      CHECK(ch.edges.size() == c.edges);
      CHECK(stats.path_mismatches == 0);
      check_hasse_invariants(Quiver::builtin(c.quiver), ch);
    }
  }

  TEST_CASE("fundamental characters") {
    CHECK(generic("A2", {{"1", 1}, {"2", 0}}).size() == 3);
    CHECK(generic("A2", {{"1", 0}, {"2", 1}}).size() == 3);
    CHECK(generic("BC2", {{"1", 1}, {"2", 0}}).size() == 5);
    CHECK(generic("BC2", {{"1", 0}, {"2", 1}}).size() == 4);

    Character bc = generic("BC2", {{"1", 1}, {"2", 0}});
    int nontrivial = 0;
    for (const auto& t : bc.terms)
      if (!t.coeff.equals(Coefficient::one())) {
        ++nontrivial;
        CHECK(t.coeff.equals(s_function(Monomial::q1(-1))));
      }
    CHECK(nontrivial == 1);
  }

  TEST_CASE("reflection coefficients") {
    const Monomial x1(Generator::x("1", 1)), x2(Generator::x("1", 2));
    YMonomial hw = YMonomial(YKey{"1", x1}) * YMonomial(YKey{"1", x2});
    CHECK(reflection_coefficient(Quiver::builtin("A1"), hw, YKey{"1", x1}).equals(s_function(x2 / x1)));
    CHECK(reflection_coefficient(Quiver::builtin("BC2"), hw, YKey{"1", x1}).equals(s_function_r(x2 / x1, 2)));
  }

  TEST_CASE("threads do not change the result") {
    Character a = generic("BC2", {{"1", 1}, {"2", 1}}, nullptr, 1);
    Character b = generic("BC2", {{"1", 1}, {"2", 1}}, nullptr, 4);
    CHECK(identical(a, b));
  }

  TEST_CASE("expansion errors") {
    Quiver a1 = Quiver::builtin("A1");
    const Monomial x(Generator::x());
    WeightConfig same{{{"1", x}, {"1", x}}};
    CHECK_THROWS_AS(expand(a1, same), CollidingArguments);

    ExpandOptions small;
    small.max_terms = 3;
    CHECK_THROWS_AS(expand(a1, WeightConfig::generic(a1, {{"1", 2}}), small), TruncationRequired);

    Quiver a0 = Quiver::builtin("A0hat");
    CHECK_THROWS_AS(expand(a0, WeightConfig::generic(a0, {{"0", 1}})), TruncationRequired);

    CHECK_THROWS_AS(WeightConfig::generic(a1, {{"7", 1}}), ValidationError);
    CHECK_THROWS_AS(WeightConfig::generic(a1, {{"1", -1}}), ValidationError);
  }

  TEST_CASE("empty weight gives the unit character") {
    Character ch = generic("A2", {{"1", 0}, {"2", 0}});
    REQUIRE(ch.size() == 1);
    CHECK(ch.terms[0].ym.is_unit());
  }

  TEST_CASE("affine expansion with a cutoff grades by the counting parameter") {
    Quiver a0 = Quiver::builtin("A0hat");
    ExpandOptions opt;
    opt.max_degree = 1;
    Character ch = expand(a0, WeightConfig::generic(a0, {{"0", 1}}), opt);
    REQUIRE(ch.size() == 2);
    CHECK(ch.terms[1].qdeg == 1);
    CHECK(ch.terms[1].coeff.qfrak_degree() == 1);
  }
}
