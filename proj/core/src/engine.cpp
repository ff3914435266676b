#include "qqkit/engine.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "qqkit/errors.hpp"
#include "qqkit/parallel.hpp"

namespace qq {

WeightConfig WeightConfig::generic(const Quiver& q, const std::vector<std::pair<std::string, int>>& w) {
  WeightConfig out;
  for (const auto& [node, k] : w) {
    if (!q.has_node(node)) throw ValidationError("weight on unknown node " + node);
    if (k < 0) throw ValidationError("negative weight on node " + node);
    for (int a = 1; a <= k; ++a) out.params.emplace_back(node, Monomial(Generator::x(node, a)));
  }
  return out;
}

YMonomial WeightConfig::highest_weight() const {
  std::vector<YMonomial::Entry> es;
  for (const auto& [node, x] : params) es.emplace_back(YKey{node, x}, 1);
  return YMonomial::from_entries(std::move(es));
}

void WeightConfig::validate(const Quiver& q) const {
  for (const auto& [node, x] : params) {
    if (!q.has_node(node)) throw ValidationError("weight on unknown node " + node);
    if (x.mentions(GenKind::qfrak)) throw ValidationError("weight parameter may not involve qfrak");
  }
  const YMonomial hw = highest_weight();
  for (const auto& [k, e] : hw.entries())
    if (e > 1) throw CollidingArguments("highest weight repeats " + k.to_string());
}

Coefficient reflection_coefficient(const Quiver& q, const YMonomial& ym, const YKey& key) {
  const int e0 = ym.exponent(key);
  if (e0 >= 2) throw CollidingArguments("reflecting " + key.to_string() + " with multiplicity " + std::to_string(e0));
  const int d = q.node(key.node).d;
  Coefficient c = a_inverse_monomial(q, key.node, key.arg).scalar;
  for (const auto& [k, e] : ym.entries()) {
    if (k.node != key.node || k.arg == key.arg) continue;
    try {
      c *= s_function_r(k.arg / key.arg, d).pow(e);
    } catch (const PoleError& err) {
      throw CollidingArguments("reflecting " + key.to_string() + " next to " + k.to_string() + ": " + err.what());
    }
    if (c.is_zero()) return c;
  }
  return c;
}

namespace {

struct Child {
  YMonomial ym;
  Coefficient coeff;
  YKey label;
};

std::vector<Child> children_of(const Quiver& q, const Term& t, std::size_t& pruned) {
  std::vector<Child> out;
  for (const auto& [key, e] : t.ym.entries()) {
    if (e <= 0) continue;
    Coefficient c = reflection_coefficient(q, t.ym, key);
    if (c.is_zero()) {
      ++pruned;
      continue;
    }
    YMonomial child = t.ym * a_inverse_monomial(q, key.node, key.arg).monomial;
    out.push_back({std::move(child), t.coeff * c, key});
  }
  return out;
}

}  // namespace

Character expand(const Quiver& q, const WeightConfig& w, const ExpandOptions& opt) {
  w.validate(q);
  if (q.has_counting() && !opt.max_degree)
    throw TruncationRequired("quiver " + q.name() + " is " + to_string(q.classify()) +
                             "; expansion needs a degree cutoff");
  ExpandStats local;
  ExpandStats& stats = opt.stats ? *opt.stats : local;

  Character ch;
  std::unordered_map<YMonomial, std::size_t, YMonomialHash> index;
  ch.terms.push_back({w.highest_weight(), Coefficient::one(), 0, 0});
  index.emplace(ch.terms.front().ym, 0);

  std::size_t level_begin = 0, level_end = 1;
  int depth = 0;
  while (level_begin < level_end) {
    if (opt.max_degree && depth >= *opt.max_degree) break;
    const std::size_t n = level_end - level_begin;
    std::vector<std::vector<Child>> kids(n);
    std::vector<std::size_t> pruned(n, 0);
    parallel_for(
        n, [&](std::size_t k) { kids[k] = children_of(q, ch.terms[level_begin + k], pruned[k]); },
        opt.threads);

    std::map<YMonomial, Coefficient> fresh;
    struct PendingEdge {
      std::size_t from;
      YMonomial to;
      YKey label;
    };
    std::vector<PendingEdge> pending;
    for (std::size_t k = 0; k < n; ++k) {
      stats.pruned += pruned[k];
      for (auto& c : kids[k]) {
        ++stats.reflections;
        pending.push_back({level_begin + k, c.ym, c.label});
        const Coefficient* seen = nullptr;
        if (auto it = index.find(c.ym); it != index.end())
          seen = &ch.terms[it->second].coeff;
        else if (auto f = fresh.find(c.ym); f != fresh.end())
          seen = &f->second;
        if (seen) {
          ++stats.merges;
          if (!seen->equals(c.coeff)) {
            ++stats.path_mismatches;
            throw PathDependence("two reflection paths give " + c.ym.to_string() + " coefficients " +
                                 seen->to_string() + " and " + c.coeff.to_string());
          }
          continue;
        }
        fresh.emplace(std::move(c.ym), std::move(c.coeff));
      }
    }
    ++depth;
    const int qdeg = q.has_counting() ? depth : 0;
    for (auto& [ym, c] : fresh) {
      index.emplace(ym, ch.terms.size());
      ch.terms.push_back({ym, c, depth, qdeg});
      if (ch.terms.size() > opt.max_terms)
        throw TruncationRequired("expansion exceeded " + std::to_string(opt.max_terms) + " terms");
    }
    for (auto& e : pending) ch.edges.push_back({e.from, index.at(e.to), std::move(e.label)});
    level_begin = level_end;
    level_end = ch.terms.size();
  }
  return ch;
}

Character closed_form_A1(const std::vector<Monomial>& x) {
  const std::size_t w = x.size();
  if (w > 20) throw ValidationError("closed_form_A1: weight too large");
  const Monomial q = Monomial::q();
  Character ch;
  for (std::size_t mask = 0; mask < (std::size_t{1} << w); ++mask) {
    // Bit set: the factor is inverted (index lies in J).
    Coefficient c = Coefficient::one();
    std::vector<YMonomial::Entry> ys;
    for (std::size_t i = 0; i < w; ++i) {
      bool in_j = (mask >> i) & 1;
      if (in_j)
        ys.emplace_back(YKey{"1", x[i] * q}, -1);
      else
        ys.emplace_back(YKey{"1", x[i]}, 1);
      if (in_j) continue;
      for (std::size_t j = 0; j < w; ++j)
        if ((mask >> j) & 1) c *= s_function(x[i] / x[j]);
    }
    if (c.is_zero()) continue;
    int depth = __builtin_popcountll(mask);
    ch.terms.push_back({YMonomial::from_entries(std::move(ys)), c, depth, 0});
  }
  std::stable_sort(ch.terms.begin(), ch.terms.end(), [](const Term& a, const Term& b) {
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.ym < b.ym;
  });
  return ch;
}

}  // namespace qq
