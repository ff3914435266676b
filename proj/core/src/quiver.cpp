#include "qqkit/quiver.hpp"

#include <numeric>
#include <set>

#include "qqkit/errors.hpp"

namespace qq {

std::string to_string(QuiverClass c) {
  switch (c) {
    case QuiverClass::finite: return "finite";
    case QuiverClass::affine: return "affine";
    case QuiverClass::indefinite: return "indefinite";
  }
  return "?";
}

Quiver::Quiver(std::string name, std::vector<Node> nodes, std::vector<Edge> edges)
    : name_(std::move(name)), nodes_(std::move(nodes)), edges_(std::move(edges)) {
  if (nodes_.empty()) throw ValidationError("quiver has no nodes");
  std::set<std::string> seen;
  for (const auto& n : nodes_) {
    if (n.id.empty()) throw ValidationError("empty node id");
    if (n.id.find_first_of("(),; ") != std::string::npos)
      throw ValidationError("node id '" + n.id + "' contains a reserved character");
    if (n.d < 1) throw ValidationError("decoration of node " + n.id + " must be positive");
    if (!seen.insert(n.id).second) throw ValidationError("duplicate node id " + n.id);
  }
  for (const auto& e : edges_) {
    if (!seen.count(e.from) || !seen.count(e.to))
      throw ValidationError("edge " + e.from + "->" + e.to + " references an unknown node");
    for (const auto& [g, x] : e.mass.entries())
      if (g.kind == GenKind::x || g.kind == GenKind::qfrak)
        throw ValidationError("edge mass may only involve q1, q2, mu");
  }
  class_ = compute_class();
}

Quiver Quiver::cyclic(int r) {
  if (r < 1) throw ValidationError("Arhat needs r >= 1");
  if (r == 1) return Quiver("A0hat", {{"0", 1}}, {{"0", "0", Monomial::mu()}});
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  for (int i = 0; i < r; ++i) nodes.push_back({std::to_string(i), 1});
  for (int i = 0; i < r; ++i) edges.push_back({std::to_string(i), std::to_string((i + 1) % r), Monomial::mu()});
  return Quiver("Arhat(" + std::to_string(r) + ")", std::move(nodes), std::move(edges));
}

Quiver Quiver::builtin(std::string_view name) {
  if (name == "A1") return Quiver("A1", {{"1", 1}}, {});
  if (name == "A2") return Quiver("A2", {{"1", 1}, {"2", 1}}, {{"1", "2", Monomial()}});
  if (name == "BC2") return Quiver("BC2", {{"1", 2}, {"2", 1}}, {{"1", "2", Monomial()}});
  if (name == "A0hat") return cyclic(1);
  std::string s(name);
  for (std::string prefix : {"Arhat(", "Arhat:"}) {
    if (s.rfind(prefix, 0) == 0) {
      std::string num = s.substr(prefix.size());
      if (prefix.back() == '(') {
        if (num.empty() || num.back() != ')') break;
        num.pop_back();
      }
      try {
        std::size_t used = 0;
        int r = std::stoi(num, &used);
        if (used == num.size()) return cyclic(r);
      } catch (const std::exception&) {
      }
    }
  }
  throw ValidationError("unknown built-in quiver '" + s + "'");
}

std::size_t Quiver::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].id == id) return i;
  throw ValidationError("unknown node '" + id + "' in quiver " + name_);
}

bool Quiver::has_node(const std::string& id) const {
  for (const auto& n : nodes_)
    if (n.id == id) return true;
  return false;
}

Generator Quiver::counting_generator(const std::string& node) const {
  if (nodes_.size() == 1) return Generator::qfrak();
  return Generator::qfrak(node);
}

namespace {

int multiplicity(const Quiver& q, std::size_t i, std::size_t j) {
  int di = q.nodes()[i].d, dj = q.nodes()[j].d;
  return di / std::gcd(di, dj);
}

}  // namespace

std::vector<std::vector<Poly>> cartan_matrix(const Quiver& q) {
  const auto n = q.nodes().size();
  std::vector<std::vector<Poly>> c(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    int di = q.nodes()[i].d;
    c[i][i] = c[i][i] + Poly(1) + Poly(1, Monomial::q1(di) * Monomial::q2());
  }
  for (const auto& e : q.edges()) {
    auto a = q.index_of(e.from), b = q.index_of(e.to);
    int dab = std::gcd(q.nodes()[a].d, q.nodes()[b].d);
    // Column i = a, row j = b: mu_e q1^{r d_ij}.
    for (int r = 0; r < multiplicity(q, a, b); ++r)
      c[b][a].add_term(e.mass * Monomial::q1(r * dab), -1);
    // Column i = b, row j = a: mu_e^{-1} q1^{(r+1) d_ij} q2.
    for (int r = 0; r < multiplicity(q, b, a); ++r)
      c[a][b].add_term(e.mass.inverse() * Monomial::q1((r + 1) * dab) * Monomial::q2(), -1);
  }
  return c;
}

std::vector<std::vector<Integer>> classical_cartan(const Quiver& q) {
  auto c = cartan_matrix(q);
  std::vector<std::vector<Integer>> out(c.size(), std::vector<Integer>(c.size()));
  for (std::size_t j = 0; j < c.size(); ++j)
    for (std::size_t i = 0; i < c.size(); ++i) {
      Rational s = 0;
      for (const auto& [m, v] : c[j][i].terms()) s += v;
      out[j][i] = s.get_num();
    }
  return out;
}

Integer integer_determinant(std::vector<std::vector<Integer>> m) {
  // Bareiss fraction-free elimination.
  const auto n = m.size();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

QuiverClass Quiver::compute_class() const {
  auto c = classical_cartan(*this);
  const auto n = c.size();
  // Leading principal minors: all positive is finite type; a vanishing
  // determinant with positive proper minors is affine.
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<Integer>> sub(k, std::vector<Integer>(k));
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) sub[a][b] = c[a][b];
    Integer d = integer_determinant(sub);
    if (k < n && d <= 0) return QuiverClass::indefinite;
    if (k == n) {
      if (d > 0) return QuiverClass::finite;
      if (d == 0) return QuiverClass::affine;
      return QuiverClass::indefinite;
    }
  }
  return QuiverClass::indefinite;
}

AInverse a_inverse_monomial(const Quiver& q, const std::string& node, const Monomial& x) {
  auto i = q.index_of(node);
  const int di = q.nodes()[i].d;
  std::vector<YMonomial::Entry> ys;
  ys.emplace_back(YKey{node, x}, -1);
  ys.emplace_back(YKey{node, x * Monomial::q1(di) * Monomial::q2()}, -1);
  Coefficient scalar = Coefficient::one();
  for (const auto& e : q.edges()) {
    auto a = q.index_of(e.from), b = q.index_of(e.to);
    int dab = std::gcd(q.nodes()[a].d, q.nodes()[b].d);
    int mult = di / dab;
    if (a == i)
      for (int r = 0; r < mult; ++r) ys.emplace_back(YKey{e.to, e.mass * x * Monomial::q1(r * dab)}, 1);
    if (b == i)
      for (int r = 0; r < mult; ++r)
        ys.emplace_back(YKey{e.from, e.mass.inverse() * x * Monomial::q1((r + 1) * dab) * Monomial::q2()}, 1);
    if (a == i && b == i) scalar *= s_function(e.mass);
  }
  if (q.has_counting()) scalar *= Coefficient::monomial(Monomial(q.counting_generator(node)));
  return {YMonomial::from_entries(std::move(ys)), scalar};
}

}  // namespace qq
