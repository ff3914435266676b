#include "qqkit/affine.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "qqkit/errors.hpp"
#include "qqkit/parallel.hpp"

namespace qq {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0) throw ValidationError("partition parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1]) throw ValidationError("partition parts must be weakly decreasing");
    size_ += parts_[k];
  }
}

int Partition::row(int k) const {
  return (k >= 1 && k <= static_cast<int>(parts_.size())) ? parts_[k - 1] : 0;
}

int Partition::col(int k) const {
  if (k < 1) return 0;
  int c = 0;
  for (int p : parts_) {
    if (p < k) break;
    ++c;
  }
  return c;
}

Partition Partition::transpose() const {
  std::vector<int> t;
  for (int k = 1; k <= row(1); ++k) t.push_back(col(k));
  return Partition(std::move(t));
}

std::vector<std::pair<int, int>> Partition::boxes() const {
  std::vector<std::pair<int, int>> out;
  for (int s2 = 1; s2 <= static_cast<int>(parts_.size()); ++s2)
    for (int s1 = 1; s1 <= parts_[s2 - 1]; ++s1) out.emplace_back(s1, s2);
  return out;
}

std::vector<std::pair<int, int>> Partition::addable() const {
  std::vector<std::pair<int, int>> out;
  const int rows = static_cast<int>(parts_.size());
  for (int s2 = 1; s2 <= rows + 1; ++s2)
    if (s2 == 1 || row(s2) < row(s2 - 1)) out.emplace_back(row(s2) + 1, s2);
  return out;
}

std::vector<std::pair<int, int>> Partition::removable() const {
  std::vector<std::pair<int, int>> out;
  const int rows = static_cast<int>(parts_.size());
  for (int s2 = 1; s2 <= rows; ++s2)
    if (row(s2) > row(s2 + 1)) out.emplace_back(row(s2), s2);
  return out;
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < parts_.size(); ++k) out += (k ? "," : "") + std::to_string(parts_[k]);
  return out + ")";
}

std::vector<Partition> Partition::all_of_size(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxp) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  return out;
}

std::vector<Partition> Partition::all_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto ps = all_of_size(k);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

BoxStats box_stats(const Partition& l, int s1, int s2) {
  BoxStats b;
  b.arm = l.row(s2) - s1;
  b.leg = l.col(s1) - s2;
  b.hook = b.arm + b.leg + 1;
  return b;
}

Monomial box_content(const Monomial& x, int s1, int s2) {
  return x * Monomial::q3(s1 - 1) * Monomial::q4(s2 - 1);
}

namespace {

int mod(int a, int r) { return ((a % r) + r) % r; }

}  // namespace

Coefficient z_partition(const Partition& l, int r, ZForm form) {
  if (r < 1) throw ValidationError("r must be positive");
  Coefficient c = Coefficient::one();
  for (auto [s1, s2] : l.boxes()) {
    auto b = box_stats(l, s1, s2);
    if (mod(b.hook, r) != 0) continue;
    if (form == ZForm::first)
      c *= s_function(Monomial::q3(-b.arm) * Monomial::q4(b.leg + 1));
    else
      c *= s_function(Monomial::q3(b.arm + 1) * Monomial::q4(-b.leg));
  }
  return c;
}

Coefficient z_A0(const Partition& l, ZForm form) { return z_partition(l, 1, form); }
Coefficient z_Ar(const Partition& l, int r, ZForm form) { return z_partition(l, r, form); }

Coefficient z_pair(const Component& a, const Component& b, int r, ZForm form) {
  const Monomial ratio = b.x / a.x;
  Coefficient c = Coefficient::one();
  for (auto [s1, s2] : a.lambda.boxes()) {
    int arm = a.lambda.row(s2) - s1;
    int leg = b.lambda.col(s1) - s2;
    if (mod(arm + leg + 1 + (a.node - b.node), r) != 0) continue;
    if (form == ZForm::first)
      c *= s_function(ratio * Monomial::q3(-arm) * Monomial::q4(leg + 1));
    else
      c *= s_function(ratio.inverse() * Monomial::q3(arm + 1) * Monomial::q4(-leg));
  }
  for (auto [s1, s2] : b.lambda.boxes()) {
    int arm = b.lambda.row(s2) - s1;
    int leg = a.lambda.col(s1) - s2;
    if (mod(arm + leg + 1 + (b.node - a.node), r) != 0) continue;
    if (form == ZForm::first)
      c *= s_function(ratio * Monomial::q3(arm + 1) * Monomial::q4(-leg));
    else
      c *= s_function(ratio.inverse() * Monomial::q3(-arm) * Monomial::q4(leg + 1));
  }
  return c;
}

Coefficient z_tuple(const std::vector<Component>& comps, int r, ZForm form) {
  Coefficient c = Coefficient::one();
  for (const auto& k : comps) c *= z_partition(k.lambda, r, form);
  for (std::size_t a = 0; a < comps.size(); ++a)
    for (std::size_t b = a + 1; b < comps.size(); ++b) c *= z_pair(comps[a], comps[b], r, form);
  return c;
}

Coefficient z_A0_tuple(const std::vector<Partition>& ls, const std::vector<Monomial>& xs) {
  if (ls.size() != xs.size()) throw ValidationError("partition and parameter counts differ");
  std::vector<Component> comps;
  for (std::size_t k = 0; k < ls.size(); ++k) comps.push_back({0, xs[k], ls[k]});
  return z_tuple(comps, 1);
}

int cyclic_rank(const Quiver& q) {
  const int r = static_cast<int>(q.nodes().size());
  for (int i = 0; i < r; ++i)
    if (q.nodes()[i].id != std::to_string(i) || q.nodes()[i].d != 1)
      throw ValidationError("quiver " + q.name() + " is not a cyclic quiver with nodes 0..r-1");
  if (static_cast<int>(q.edges().size()) != r)
    throw ValidationError("quiver " + q.name() + " is not a cyclic quiver");
  for (int i = 0; i < r; ++i) {
    const auto& e = q.edges()[i];
    if (e.from != std::to_string(i) || e.to != std::to_string((i + 1) % r) || !(e.mass == Monomial::mu()))
      throw ValidationError("quiver " + q.name() + " is not the cyclic quiver with uniform mass mu");
  }
  return r;
}

YMonomial tuple_ymonomial(const Quiver& q, const std::vector<Component>& comps) {
  const int r = static_cast<int>(q.nodes().size());
  std::vector<YMonomial::Entry> ys;
  for (const auto& k : comps) {
    for (auto [s1, s2] : k.lambda.addable())
      ys.emplace_back(YKey{q.nodes()[mod(s1 - s2 + k.node, r)].id, box_content(k.x, s1, s2)}, 1);
    for (auto [s1, s2] : k.lambda.removable())
      ys.emplace_back(YKey{q.nodes()[mod(s1 - s2 + k.node, r)].id, box_content(k.x, s1, s2) * Monomial::q()}, -1);
  }
  return YMonomial::from_entries(std::move(ys));
}

Monomial tuple_weight(const Quiver& q, const std::vector<Component>& comps) {
  const int r = static_cast<int>(q.nodes().size());
  std::vector<Monomial::Entry> es;
  for (const auto& k : comps)
    for (auto [s1, s2] : k.lambda.boxes())
      es.emplace_back(q.counting_generator(q.nodes()[mod(s1 - s2 + k.node, r)].id), 1);
  return Monomial::from_entries(std::move(es));
}

Character affine_character(const Quiver& q, const WeightConfig& w, int max_degree, unsigned threads) {
  const int r = cyclic_rank(q);
  w.validate(q);
  if (max_degree < 0) throw ValidationError("max degree must be nonnegative");
  const std::size_t n = w.params.size();
  // Enumerate tuples of total size <= max_degree in a fixed order.
  std::vector<std::vector<Partition>> tuples;
  std::vector<Partition> cur(n);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
    if (k == n) {
      tuples.push_back(cur);
      return;
    }
    for (int s = 0; s <= left; ++s)
      for (auto& p : Partition::all_of_size(s)) {
        cur[k] = p;
        rec(k + 1, left - s);
      }
  };
  rec(0, max_degree);

  std::vector<Term> terms(tuples.size());
  parallel_for(
      tuples.size(),
      [&](std::size_t t) {
        std::vector<Component> comps;
        int total = 0;
        for (std::size_t k = 0; k < n; ++k) {
          comps.push_back({static_cast<int>(q.index_of(w.params[k].first)), w.params[k].second, tuples[t][k]});
          total += tuples[t][k].size();
        }
        Coefficient c = z_tuple(comps, r) * Coefficient::monomial(tuple_weight(q, comps));
        terms[t] = {tuple_ymonomial(q, comps), std::move(c), total, total};
      },
      threads);

  Character ch;
  for (auto& t : terms)
    if (!t.coeff.is_zero()) ch.terms.push_back(std::move(t));
  std::stable_sort(ch.terms.begin(), ch.terms.end(), [](const Term& a, const Term& b) {
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.ym < b.ym;
  });
  for (std::size_t i = 1; i < ch.terms.size(); ++i)
    if (ch.terms[i].ym == ch.terms[i - 1].ym)
      throw YCollision("two configurations give " + ch.terms[i].ym.to_string());
  return ch;
}

bool pit_filter(const Partition& l, int i, int j) { return !l.contains(i, j); }

void check_pit(int i, int j, int r) {
  if (i < 1 || j < 1) throw InvalidPit("pit position must be positive");
  if (r < 1) throw InvalidPit("r must be positive");
  if ((i + j - 1) % r != 0)
    throw InvalidPit("pit (" + std::to_string(i) + "," + std::to_string(j) + ") needs i+j-1 in " +
                     std::to_string(r) + "Z");
}

Substitution pit_resonance(int i, int j, int r) {
  check_pit(i, j, r);
  // mu^n = q1^j q2^{j-1}, n = i+j-1, realized on a rank-two lattice.
  const int n = i + j - 1;
  Substitution s{{Generator::q1(), Monomial::q1(n)},
                 {Generator::q2(), Monomial::q2(n)},
                 {Generator::mu(), Monomial::q1(j) * Monomial::q2(j - 1)}};
  const Monomial mu_tot = Monomial::mu(r).substitute(s);
  if (mu_tot.is_unit() || (mu_tot.inverse() * Monomial::q(r).substitute(s)).is_unit())
    throw InvalidPit("resonance makes the total mass degenerate");
  return s;
}

std::optional<std::pair<int, int>> resonance_to_pit(const Monomial& relation) {
  for (const Monomial& m : {relation, relation.inverse()}) {
    if (m.drop_if([](const Generator& g) { return g.kind == GenKind::q1 || g.kind == GenKind::q2 || g.kind == GenKind::mu; }) !=
        Monomial())
      return std::nullopt;
    const int a1 = m.exponent(Generator::q1()), a2 = m.exponent(Generator::q2()), am = m.exponent(Generator::mu());
    // q3^i q4^{1-j} / q1 = mu^{i+j-1} q1^{-j} q2^{1-j}
    {
      int j = -a1;
      int i = am - j + 1;
      if (a2 == 1 - j && i >= 1 && j >= 1) return std::make_pair(i, j);
    }
    // q3^i q4^{1-j} / q2 = mu^{i+j-1} q1^{1-j} q2^{-j}
    {
      int j = -a2;
      int i = am - j + 1;
      if (a1 == 1 - j && i >= 1 && j >= 1) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

bool burge_filter(const Partition& alpha, const Partition& beta, int i, int j) {
  const int rows = std::max(static_cast<int>(alpha.parts().size()), static_cast<int>(beta.parts().size())) + 1;
  for (int k = 1; k <= rows; ++k)
    if (beta.row(k) - alpha.row(k + j - 1) < i) return false;
  return true;
}

bool burge_applies(int i, int j, int node_alpha, int node_beta, int r) {
  return mod(i + j - 1 - (node_alpha - node_beta), r) == 0;
}

Substitution burge_resonance(const Monomial& x_alpha, const Generator& x_beta, int i, int j) {
  return {{x_beta, x_alpha * Monomial::q1() * Monomial::q3(-i) * Monomial::q4(j - 1)}};
}

EquivalenceReport pit_equivalence(int r, int i, int j, int max_size) {
  auto sigma = pit_resonance(i, j, r);
  EquivalenceReport rep;
  for (const auto& l : Partition::all_up_to(max_size)) {
    ++rep.checked;
    bool vanishes = false;
    std::string note;
    try {
      vanishes = z_Ar(l, r).specialize(sigma).is_zero();
    } catch (const PoleError& e) {
      note = std::string(" pole: ") + e.what();
    }
    if (vanishes) ++rep.vanishing;
    if (vanishes == pit_filter(l, i, j) || !note.empty()) {
      ++rep.exceptions;
      if (rep.samples.size() < 5)
        rep.samples.push_back(l.to_string() + (vanishes ? " vanishes" : " survives") + note);
    }
  }
  return rep;
}

EquivalenceReport burge_equivalence(int r, int i, int j, int node_alpha, int node_beta, int max_size,
                                    unsigned threads) {
  if (i > 0 || j < 1) throw ValidationError("Burge parameters need i <= 0 and j >= 1");
  const std::string na = std::to_string(node_alpha), nb = std::to_string(node_beta);
  const Generator ga = Generator::x(na, 1);
  const Generator gb = Generator::x(nb, node_alpha == node_beta ? 2 : 1);
  const auto sigma = burge_resonance(Monomial(ga), gb, i, j);
  const bool applies = burge_applies(i, j, node_alpha, node_beta, r);

  std::vector<std::pair<Partition, Partition>> pairs;
  for (int n = 0; n <= max_size; ++n)
    for (int a = 0; a <= n; ++a)
      for (const auto& la : Partition::all_of_size(a))
        for (const auto& lb : Partition::all_of_size(n - a)) pairs.emplace_back(la, lb);

  std::vector<int> verdict(pairs.size());  // 0 agree, 1 agree+vanish, 2 mismatch, 3 pole
  parallel_for(
      pairs.size(),
      [&](std::size_t k) {
        const auto& [la, lb] = pairs[k];
        std::vector<Component> comps{{node_alpha, Monomial(ga), la}, {node_beta, Monomial(gb), lb}};
        bool vanishes;
        try {
          vanishes = z_tuple(comps, r).specialize(sigma).is_zero();
        } catch (const PoleError&) {
          verdict[k] = 3;
          return;
        }
        bool filter = applies ? burge_filter(la, lb, i, j) : true;
        verdict[k] = (vanishes == !filter) ? (vanishes ? 1 : 0) : 2;
      },
      threads);

  EquivalenceReport rep;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    ++rep.checked;
    if (verdict[k] == 1) ++rep.vanishing;
    if (verdict[k] >= 2) {
      ++rep.exceptions;
      if (rep.samples.size() < 5)
        rep.samples.push_back(pairs[k].first.to_string() + "," + pairs[k].second.to_string() +
                              (verdict[k] == 3 ? " pole" : " mismatch"));
    }
  }
  return rep;
}

}  // namespace qq
