#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "qqkit/affine.hpp"
#include "qqkit/engine.hpp"
#include "qqkit/errors.hpp"

using namespace qq;

namespace {

Character affine_vs_engine(const char* quiver, std::vector<std::pair<std::string, int>> w, int deg, Character* engine) {
  Quiver q = Quiver::builtin(quiver);
  WeightConfig wc = WeightConfig::generic(q, w);
  ExpandOptions opt;
  opt.max_degree = deg;
  *engine = expand(q, wc, opt);
  return affine_character(q, wc, deg);
}

}  // namespace

TEST_SUITE("affine") {
  TEST_CASE("partition enumeration") {
    const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15};
    for (int n = 0; n < 8; ++n) CHECK(Partition::all_of_size(n).size() == static_cast<std::size_t>(counts[n]));
    CHECK(Partition::all_up_to(4).size() == 12);
    for (const auto& l : Partition::all_up_to(7)) {
      CHECK(l.transpose().transpose() == l);
      CHECK(l.transpose().size() == l.size());
      CHECK(static_cast<int>(l.boxes().size()) == l.size());
    }
    CHECK_THROWS_AS(Partition({1, 2}), ValidationError);
  }

  TEST_CASE("box statistics") {
    Partition l({3, 1});
    CHECK(l.col(1) == 2);
    CHECK(l.row(3) == 0);
    BoxStats corner = box_stats(l, 1, 1);
    CHECK(corner.arm == 2);
    CHECK(corner.leg == 1);
    CHECK(corner.hook == 4);
    BoxStats mid = box_stats(l, 2, 1);
    CHECK(mid.arm == 1);
    CHECK(mid.leg == 0);
    CHECK(mid.hook == 2);
    BoxStats outside = box_stats(l, 2, 2);
    CHECK(outside.arm == -1);
    CHECK(outside.leg == -1);
    CHECK(l.addable().size() == 3);
    CHECK(l.removable().size() == 2);
    CHECK(box_content(Monomial(Generator::x()), 2, 3) == Monomial(Generator::x()) * Monomial::q3() * Monomial::q4(2));
  }

  TEST_CASE("diagonal factors") {
    CHECK(z_A0(Partition()).equals(Coefficient::one()));
    CHECK(z_A0(Partition({1})).equals(s_function(Monomial::q3())));
    CHECK(z_Ar(Partition({1}), 2).equals(Coefficient::one()));
    CHECK_FALSE(z_Ar(Partition({2}), 2).equals(Coefficient::one()));
    for (const auto& l : Partition::all_up_to(5)) CHECK(z_Ar(l, 1).equals(z_A0(l)));
  }

  TEST_CASE("both product forms agree") {
    for (int r = 1; r <= 3; ++r)
      for (const auto& l : Partition::all_up_to(6)) {
        CAPTURE(l.to_string());
        CHECK(z_Ar(l, r, ZForm::first).equals(z_Ar(l, r, ZForm::second)));
      }
    const Monomial x1(Generator::x("0", 1)), x2(Generator::x("0", 2));
    for (const auto& a : Partition::all_up_to(3))
      for (const auto& b : Partition::all_up_to(3)) {
        std::vector<Component> comps{{0, x1, a}, {0, x2, b}};
        CHECK(z_tuple(comps, 1, ZForm::first).equals(z_tuple(comps, 1, ZForm::second)));
      }
  }

  TEST_CASE("pits") {
    CHECK(pit_filter(Partition(), 1, 1));
    CHECK_FALSE(pit_filter(Partition({1}), 1, 1));
    CHECK(pit_filter(Partition({1, 1, 1}), 2, 1));
    CHECK_FALSE(pit_filter(Partition({2}), 2, 1));
    CHECK_NOTHROW(check_pit(2, 1, 2));
    CHECK_THROWS_AS(check_pit(1, 1, 2), InvalidPit);
    CHECK_THROWS_AS(check_pit(0, 1, 1), InvalidPit);
    auto pit = resonance_to_pit(Monomial::q3(2) * Monomial::q4(-1) / Monomial::q1());
    REQUIRE(pit);
    CHECK(*pit == std::pair{2, 2});
    EquivalenceReport rep = pit_equivalence(1, 1, 1, 6);
    CHECK(rep.exceptions == 0);
    CHECK(rep.checked == Partition::all_up_to(6).size());
  }

  TEST_CASE("Burge filter") {
    CHECK(burge_filter(Partition(), Partition(), 0, 1));
    CHECK(burge_filter(Partition(), Partition({1}), 0, 1));
    CHECK_FALSE(burge_filter(Partition({1}), Partition(), 0, 1));
    CHECK(burge_filter(Partition({1}), Partition(), -1, 1));
    CHECK(burge_filter(Partition({2, 1}), Partition({1}), 0, 2));
    CHECK(burge_applies(0, 1, 0, 0, 1));
    CHECK_FALSE(burge_applies(0, 2, 0, 0, 2));
    CHECK(burge_applies(0, 2, 1, 0, 2));
    CHECK_THROWS_AS(burge_equivalence(1, 1, 1, 0, 0, 2), ValidationError);
  }

  TEST_CASE("Burge resonance vanishing matches the filter") {
    for (int i = 0; i >= -2; --i)
      for (int j = 1; j <= 3; ++j) {
        CAPTURE(i);
        CAPTURE(j);
        EquivalenceReport rep = burge_equivalence(1, i, j, 0, 0, 4);
        CHECK(rep.exceptions == 0);
      }
    CHECK(burge_equivalence(1, 0, 1, 0, 0, 4).vanishing > 0);
    EquivalenceReport two = burge_equivalence(2, -1, 2, 0, 1, 4);
    CHECK(two.exceptions == 0);
  }

  TEST_CASE("partition sum equals the truncated expansion") {
    Character engine;
    Character a = affine_vs_engine("A0hat", {{"0", 1}}, 3, &engine);
    std::string why;
    CHECK_MESSAGE(same_terms(a, engine, &why), why);
    CHECK(a.size() == 1 + 1 + 2 + 3);

    a = affine_vs_engine("A0hat", {{"0", 2}}, 2, &engine);
    CHECK_MESSAGE(same_terms(a, engine, &why), why);

    a = affine_vs_engine("Arhat:2", {{"0", 1}, {"1", 0}}, 2, &engine);
    CHECK_MESSAGE(same_terms(a, engine, &why), why);
  }

  TEST_CASE("counting degree is the box count") {
    Quiver q = Quiver::builtin("A0hat");
    WeightConfig wc = WeightConfig::generic(q, {{"0", 2}});
    Character ch = affine_character(q, wc, 3);
    const Monomial x1(Generator::x("0", 1)), x2(Generator::x("0", 2));
    std::size_t seen = 0;
    for (const auto& a : Partition::all_up_to(3))
      for (const auto& b : Partition::all_up_to(3 - a.size())) {
        std::vector<Component> comps{{0, x1, a}, {0, x2, b}};
        const Term* t = ch.find(tuple_ymonomial(q, comps));
        REQUIRE(t);
        CHECK(t->qdeg == a.size() + b.size());
        CHECK(t->coeff.qfrak_degree() == a.size() + b.size());
        ++seen;
      }
    CHECK(seen == ch.size());
  }

  TEST_CASE("cyclic rank") {
    CHECK(cyclic_rank(Quiver::builtin("A0hat")) == 1);
    CHECK(cyclic_rank(Quiver::builtin("Arhat:3")) == 3);
    CHECK_THROWS_AS(cyclic_rank(Quiver::builtin("A2")), ValidationError);
  }
}
