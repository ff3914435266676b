// Acceptance run: one line per criterion. Exit status is nonzero only when a
// criterion fails that is not listed as known-unattainable.

#include <gmpxx.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qqkit/affine.hpp"
#include "qqkit/engine.hpp"
#include "qqkit/errors.hpp"
#include "qqkit/higgs.hpp"
#include "qqkit/serialize.hpp"
#include "qqkit/verify.hpp"

using namespace qq;

namespace {

struct Outcome {
  bool pass = true;
  bool known_unattainable = false;
  std::string detail;
};

struct Context {
  std::vector<Fixture> corpus;
  VerifyReport report;
  const FixtureResult& result(const std::string& name) const {
    for (const auto& r : report.results)
      if (r.name == name) return r;
    throw std::runtime_error("missing fixture " + name);
  }
  // Fixtures named here pass, or are flagged misprints whose corrected text passes.
  bool reproduced(const std::vector<std::string>& names, std::string& why) const {
    bool ok = true;
    for (const auto& n : names) {
      const FixtureResult& r = result(n);
      if (r.status == VerifyStatus::fail) {
        ok = false;
        why += " " + n + ": " + r.first_difference + ";";
      }
    }
    return ok;
  }
  std::vector<std::string> with_prefix(const std::string& prefix) const {
    std::vector<std::string> out;
    for (const auto& f : corpus)
      if (f.name.rfind(prefix, 0) == 0) out.push_back(f.name);
    return out;
  }
};

std::vector<std::pair<std::string, int>> weights(const Quiver& q, std::vector<int> w) {
  std::vector<std::pair<std::string, int>> out;
  for (std::size_t k = 0; k < w.size(); ++k) out.emplace_back(q.nodes()[k].id, w[k]);
  return out;
}

Character generic(const Quiver& q, std::vector<int> w, ExpandStats* stats = nullptr, std::optional<int> deg = {}) {
  ExpandOptions opt;
  opt.stats = stats;
  opt.max_degree = deg;
  return expand(q, WeightConfig::generic(q, weights(q, std::move(w))), opt);
}

std::vector<Monomial> a1_params(int w) {
  std::vector<Monomial> xs;
  for (int a = 1; a <= w; ++a) xs.emplace_back(Generator::x("1", a));
  return xs;
}

Integer binomial(int n, int k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

std::string counts(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "/" : "") + std::to_string(v[k]);
  return s;
}

Outcome a1_expansions(const Context& ctx) {
  Outcome o;
  std::string why;
  o.pass = ctx.reproduced({"a1-fundamental", "a1-weight-two-generic", "a1-weight-three-generic"}, why);
  Quiver a1 = Quiver::builtin("A1");
  for (int w = 1; w <= 6; ++w) {
    Character ch = generic(a1, {w});
    if (!same_terms(ch, closed_form_A1(a1_params(w)), &why) || ch.size() != (std::size_t{1} << w)) {
      o.pass = false;
      why += " closed form differs at w=" + std::to_string(w) + ";";
    }
  }
  const bool flagged = ctx.result("a1-weight-three-generic").status == VerifyStatus::typo_flag;
  o.detail = "2, 4 and 8 terms reproduced" + std::string(flagged ? " (weight three via its corrected text)" : "") +
             "; expand = subset-sum formula for w <= 6" + why;
  return o;
}

Outcome a1_kr(const Context& ctx) {
  Outcome o;
  std::string why;
  o.pass = ctx.reproduced({"a1-weight-two-kr-q1", "a1-weight-two-kr-q2", "a1-weight-three-kr-q1"}, why);
  Quiver a1 = Quiver::builtin("A1");
  for (int w = 1; w <= 6; ++w)
    for (int m = 1; m <= 2; ++m) {
      HiggsResult h = higgs(generic(a1, {w}), parameter_substitution("1", kr_params(a1, "1", w, m)));
      if (h.kept.size() != static_cast<std::size_t>(w + 1) || !same_terms(h.kept, kr_closed_form_A1(w, m), &why)) {
        o.pass = false;
        why += " w=" + std::to_string(w) + " m=" + std::to_string(m) + ";";
      }
    }
  o.detail = "w+1 terms with product-of-S coefficients for w <= 6, both shifts" + why;
  return o;
}

Outcome a1_limits(const Context& ctx) {
  Outcome o;
  std::string why;
  o.pass = ctx.reproduced(ctx.with_prefix("a1-weight-two-kr-q1-limit"), why) &&
           ctx.reproduced(ctx.with_prefix("a1-weight-two-kr-q2-limit"), why) &&
           ctx.reproduced(ctx.with_prefix("a1-weight-three-kr-q1-limit"), why);
  ClassicalCharacter fundamental = classical_limit(kr_closed_form_A1(1, 1), Generator::q1());
  for (int w = 1; w <= 6; ++w) {
    Character kr = kr_closed_form_A1(w, 1);
    ClassicalCharacter l1 = classical_limit(kr, Generator::q1());
    std::multiset<Integer> got, want;
    for (const auto& t : l1.terms) got.insert(t.coeff);
    for (int v = 0; v <= w; ++v) want.insert(binomial(w, v));
    bool ok = got == want && factorize_check(l1, std::vector<ClassicalCharacter>(w, fundamental));
    ClassicalCharacter l2 = classical_limit(kr, Generator::q2());
    for (const auto& t : l2.terms) ok = ok && t.coeff == 1;
    ok = ok && l2.terms.size() == static_cast<std::size_t>(w + 1);
    if (!ok) {
      o.pass = false;
      why += " w=" + std::to_string(w) + ";";
    }
  }
  o.detail = "q1 -> 1 gives binomial(w,v) and the w-th power of the fundamental; q2 -> 1 gives all ones; w <= 6" + why;
  return o;
}

Outcome a2(const Context& ctx) {
  Outcome o;
  std::string why;
  Quiver q = Quiver::builtin("A2");
  std::vector<std::size_t> generic_counts{generic(q, {2, 0}).size(), generic(q, {0, 2}).size(),
                                          generic(q, {1, 1}).size()};
  const std::vector<std::string> higgsed{"a2-w20-kr-q1", "a2-w02-kr-q1", "a2-w11-case-a", "a2-w11-case-b",
                                         "a2-w11-case-c"};
  std::vector<std::size_t> higgs_counts;
  for (const auto& n : higgsed) higgs_counts.push_back(ctx.result(n).actual_terms);
  o.pass = generic_counts == std::vector<std::size_t>{9, 9, 9} &&
           higgs_counts == std::vector<std::size_t>{6, 6, 8, 8, 8} && ctx.reproduced(higgsed, why) &&
           ctx.reproduced({"a2-w20-kr-q1-dropped", "a2-w20-kr-q1-dropped-is-fundamental"}, why);
  std::size_t limits = 0, factorizing = 0;
  for (const auto& f : ctx.corpus) {
    if (f.name.rfind("a2-w11-case-", 0) != 0 || !f.limit) continue;
    ++limits;
    if (!f.factors.empty() && ctx.result(f.name).status != VerifyStatus::fail) ++factorizing;
  }
  o.pass = o.pass && ctx.reproduced(ctx.with_prefix("a2-w11-case-"), why) && limits == 6 && factorizing == 4;
  o.detail = "generic " + counts(generic_counts) + ", Higgsed " + counts(higgs_counts) +
             ", dropped terms = node-2 fundamental, " + std::to_string(limits) + " limits with " +
             std::to_string(factorizing) + " factorizations" + why;
  return o;
}

Outcome bc2(const Context& ctx) {
  Outcome o;
  std::string why;
  Quiver q = Quiver::builtin("BC2");
  std::vector<std::size_t> generic_counts{generic(q, {2, 0}).size(), generic(q, {0, 2}).size(),
                                          generic(q, {1, 1}).size()};
  std::vector<std::size_t> higgs_counts{ctx.result("bc2-w20-kr").actual_terms, ctx.result("bc2-w02-kr").actual_terms,
                                        ctx.result("bc2-w11-case-a").actual_terms,
                                        ctx.result("bc2-w11-case-b").actual_terms};
  std::size_t factorizing = 0;
  for (const auto& f : ctx.corpus)
    if (f.name.rfind("bc2-", 0) == 0 && !f.factors.empty() && ctx.result(f.name).status != VerifyStatus::fail)
      ++factorizing;
  const bool fundamentals = ctx.result("bc2-fundamental-node1").status == VerifyStatus::pass &&
                            ctx.result("bc2-fundamental-node2").status == VerifyStatus::pass;
  o.pass = generic_counts == std::vector<std::size_t>{25, 16, 20} &&
           higgs_counts == std::vector<std::size_t>{14, 11, 16, 16} && fundamentals &&
           ctx.reproduced(ctx.with_prefix("bc2-"), why) && factorizing == 4;
  o.detail = "generic " + counts(generic_counts) + ", Higgsed " + counts(higgs_counts) +
             " (the (0,2) character carries the trivial summand: 10 + 1), " + std::to_string(factorizing) +
             " factorized limits, fundamentals exact" + why;
  return o;
}

Outcome hasse(const Context& ctx) {
  Outcome o;
  std::string why, shape;
  std::vector<std::string> names;
  for (const auto& f : ctx.corpus)
    if (f.check == CheckKind::hasse) names.push_back(f.name);
  o.pass = !names.empty() && ctx.reproduced(names, why);
  for (const auto& n : names) {
    const FixtureResult& r = ctx.result(n);
    shape += (shape.empty() ? "" : ", ") + n + " " + std::to_string(r.actual_terms) + "/" +
             std::to_string(r.actual_edges);
    if (r.expected_edges && *r.expected_edges != r.actual_edges) o.pass = false;
  }
  o.detail = "nodes/edges " + shape + why;
  return o;
}

Outcome affine_oracle(const Context&) {
  Outcome o;
  std::string why;
  struct Case {
    const char* quiver;
    std::vector<int> w;
    int deg;
  };
  for (const Case& c : {Case{"A0hat", {1}, 3}, Case{"A0hat", {2}, 2}, Case{"Arhat:2", {1, 0}, 2}}) {
    Quiver q = Quiver::builtin(c.quiver);
    WeightConfig wc = WeightConfig::generic(q, weights(q, c.w));
    ExpandOptions opt;
    opt.max_degree = c.deg;
    Character engine = expand(q, wc, opt);
    Character sum = affine_character(q, wc, c.deg);
    if (!same_terms(sum, engine, &why)) {
      o.pass = false;
      why = std::string(" ") + c.quiver + ": " + why + ";";
    }
    o.detail += (o.detail.empty() ? "" : ", ") + std::string(c.quiver) + " to degree " + std::to_string(c.deg) + " (" +
                std::to_string(engine.size()) + " terms)";
  }
  o.detail = "partition sum = truncated expansion: " + o.detail + why;
  return o;
}

Outcome resonance(const Context&) {
  Outcome o;
  std::size_t burge_checked = 0, burge_exceptions = 0, burge_cases = 0;
  for (int r = 1; r <= 2; ++r)
    for (int i = 0; i >= -2; --i)
      for (int j = 1; j <= 3; ++j)
        for (int a = 0; a < r; ++a)
          for (int b = 0; b < r; ++b) {
            EquivalenceReport rep = burge_equivalence(r, i, j, a, b, 6);
            burge_checked += rep.checked;
            burge_exceptions += rep.exceptions;
            ++burge_cases;
          }
  std::size_t pit_cases = 0, pit_exceptions = 0;
  std::string failing;
  for (int r = 1; r <= 2; ++r)
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) {
        if ((i + j - 1) % r != 0) continue;
        EquivalenceReport rep = pit_equivalence(r, i, j, 6);
        ++pit_cases;
        pit_exceptions += rep.exceptions;
        if (rep.exceptions)
          failing += " r=" + std::to_string(r) + "(" + std::to_string(i) + "," + std::to_string(j) + "):" +
                     std::to_string(rep.exceptions);
      }
  const bool burge_ok = burge_exceptions == 0;
  const bool pit_ok = pit_exceptions == 0;
  o.pass = burge_ok && pit_ok;
  o.known_unattainable = burge_ok && !pit_ok;
  o.detail = "Burge: " + std::to_string(burge_cases) + " parameter sets, " + std::to_string(burge_checked) +
             " pairs, " + std::to_string(burge_exceptions) + " exceptions; pits: " + std::to_string(pit_cases) +
             " positions, " + std::to_string(pit_exceptions) + " exceptions";
  if (!pit_ok) o.detail += " (single-partition resonance matches the pit filter only at (1,1);" + failing + ")";
  return o;
}

Outcome properties(const Context& ctx) {
  Outcome o;
  std::mt19937 gen(7u);
  auto draw = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); };
  auto monomial = [&](int lo, int hi) {
    return Monomial::from_entries(
        {{Generator::q1(), draw(lo, hi)}, {Generator::q2(), draw(lo, hi)}, {Generator::x(), draw(lo, hi)}});
  };
  std::size_t s_checked = 0, s_bad = 0;
  while (s_checked < 1000) {
    Monomial z = monomial(-4, 4);
    if (z.is_unit() || z == Monomial::q()) continue;
    ++s_checked;
    if (!s_function(z).equals(s_function(Monomial::q() / z))) ++s_bad;
    Monomial inv = z.inverse();
    if (inv.is_unit() || inv == Monomial::q()) continue;
    // S(z) S(1/z) is symmetric under z -> 1/z.
    if (!(s_function(z) * s_function(inv)).equals(s_function(inv) * s_function(z))) ++s_bad;
  }

  auto coefficient = [&] {
    Coefficient c = Coefficient::constant(Rational(draw(1, 5), draw(1, 3))) * Coefficient::monomial(monomial(-2, 2));
    Monomial z = monomial(-2, 2);
    if (!z.is_unit() && z != Monomial::q()) c *= s_function(z);
    if (draw(0, 1)) c += Coefficient::monomial(monomial(-1, 1));
    return c.is_zero() ? Coefficient::one() : c;
  };
  std::size_t ring_bad = 0;
  const int triples = 200;
  for (int k = 0; k < triples; ++k) {
    Coefficient a = coefficient(), b = coefficient(), c = coefficient();
    bool ok = (a + b).equals(b + a) && (a * b).equals(b * a) && ((a + b) + c).equals(a + (b + c)) &&
              ((a * b) * c).equals(a * (b * c)) && (a * (b + c)).equals(a * b + a * c) && (a - a).is_zero() &&
              (a.kind() != Coefficient::Kind::factored || (a * a.inverse()).equals(Coefficient::one()));
    if (!ok) ++ring_bad;
  }

  std::size_t mismatches = ctx.report.path_mismatches(), roundtrips = 0, roundtrip_bad = 0;
  std::set<std::pair<std::string, std::vector<std::pair<std::string, int>>>> seen;
  for (const auto& f : ctx.corpus) {
    if (!seen.insert({f.quiver, f.weights}).second) continue;
    Quiver q = resolve_quiver(f.quiver);
    ExpandStats stats;
    ExpandOptions opt;
    opt.stats = &stats;
    Character ch = expand(q, WeightConfig::generic(q, f.weights), opt);
    mismatches += stats.path_mismatches;
    ++roundtrips;
    if (!identical(character_from_json(character_to_json(ch)), ch)) ++roundtrip_bad;
  }
  o.pass = s_bad == 0 && ring_bad == 0 && mismatches == 0 && roundtrip_bad == 0;
  o.detail = "S reflection on " + std::to_string(s_checked) + " monomials (" + std::to_string(s_bad) +
             " bad), ring axioms on " + std::to_string(triples) + " triples (" + std::to_string(ring_bad) +
             " bad), path mismatches " + std::to_string(mismatches) + ", JSON round trips " +
             std::to_string(roundtrips) + " (" + std::to_string(roundtrip_bad) + " bad)";
  return o;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  Context ctx;
  ctx.corpus = load_corpus(QQKIT_FIXTURE_DIR);
  ctx.report = verify(ctx.corpus);

  const std::vector<std::function<Outcome(const Context&)>> criteria{
      a1_expansions, a1_kr, a1_limits, a2, bc2, hasse, affine_oracle, resonance, properties};

  int unexpected = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k](ctx);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::string verdict = o.pass ? "PASS" : (o.known_unattainable ? "FAIL (known unattainable)" : "FAIL");
    std::cout << "criterion " << k + 1 << " " << verdict << ": " << o.detail << "\n";
    if (!o.pass && !o.known_unattainable) ++unexpected;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "corpus: " << ctx.report.count(VerifyStatus::pass) << " pass, "
            << ctx.report.count(VerifyStatus::typo_flag) << " flagged misprints, "
            << ctx.report.count(VerifyStatus::fail) << " fail; total " << seconds << " s\n";
  return unexpected == 0 ? 0 : 1;
}
