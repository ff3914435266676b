#include "qqkit/higgs.hpp"

#include <map>

#include "qqkit/errors.hpp"

namespace qq {

std::vector<Monomial> kr_params(const Quiver& q, const std::string& node, int k, int m, const Monomial& x) {
  if (k < 1) throw ValidationError("KR degree must be positive");
  if (m != 1 && m != 2) throw ValidationError("KR shift must be q1 or q2");
  const int d = q.node(node).d;
  std::vector<Monomial> out;
  for (int a = 0; a < k; ++a) out.push_back(x * Monomial::qm(m, a * d));
  return out;
}

Substitution parameter_substitution(const std::string& node, const std::vector<Monomial>& params) {
  Substitution s;
  for (std::size_t a = 0; a < params.size(); ++a)
    s.emplace(Generator::x(node, static_cast<int>(a) + 1), params[a]);
  return s;
}

HiggsResult higgs(const Character& ch, const Substitution& sigma) {
  HiggsResult out;
  std::vector<std::ptrdiff_t> remap(ch.terms.size(), -1);
  std::map<YMonomial, std::size_t> where;
  for (std::size_t i = 0; i < ch.terms.size(); ++i) {
    const Term& t = ch.terms[i];
    Coefficient c = t.coeff.specialize(sigma);
    if (c.is_zero()) {
      out.dropped.push_back(t);
      continue;
    }
    YMonomial ym = t.ym.substitute(sigma);
    if (auto it = where.find(ym); it != where.end())
      throw YCollision("terms " + t.ym.to_string() + " and " + ch.terms[it->second].ym.to_string() +
                       " both specialize to " + ym.to_string());
    where.emplace(ym, i);
    remap[i] = static_cast<std::ptrdiff_t>(out.kept.terms.size());
    out.kept.terms.push_back({std::move(ym), std::move(c), t.depth, t.qdeg});
  }
  for (const auto& e : ch.edges) {
    if (remap[e.from] < 0 || remap[e.to] < 0) continue;
    out.kept.edges.push_back({static_cast<std::size_t>(remap[e.from]), static_cast<std::size_t>(remap[e.to]),
                              YKey{e.label.node, e.label.arg.substitute(sigma)}});
  }
  return out;
}

ClassicalCharacter classical_limit(const Character& ch, const Generator& g) {
  const Substitution to_one{{g, Monomial()}};
  std::vector<ClassicalTerm> terms;
  for (const auto& t : ch.terms) {
    Coefficient c = t.coeff.limit_at_unity(g);
    auto v = c.constant_value();
    if (!v) throw NonIntegerLimit("limit of " + t.coeff.to_string() + " is not a number: " + c.to_string());
    if (v->get_den() != 1) throw NonIntegerLimit("limit of " + t.coeff.to_string() + " is " + v->get_str());
    if (*v == 0) continue;
    terms.push_back({t.ym.substitute(to_one), v->get_num()});
  }
  return ClassicalCharacter::from_terms(std::move(terms));
}

bool factorize_check(const ClassicalCharacter& c, const std::vector<ClassicalCharacter>& factors) {
  if (factors.empty()) return false;
  ClassicalCharacter prod = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) prod = prod * factors[i];
  return prod == c;
}

Character kr_closed_form_A1(int w, int m, const Monomial& x) {
  if (w < 1) throw ValidationError("weight must be positive");
  if (m != 1 && m != 2) throw ValidationError("KR shift must be q1 or q2");
  const int other = 3 - m;
  Character ch;
  for (int v = 0; v <= w; ++v) {
    Coefficient c = Coefficient::one();
    for (int i = 1; i <= w - v; ++i)
      for (int j = 1; j <= v; ++j) c *= s_function(Monomial::qm(m, 1 - i - j));
    std::vector<YMonomial::Entry> ys;
    for (int i = 1; i <= w - v; ++i) ys.emplace_back(YKey{"1", x * Monomial::qm(m, i - 1)}, 1);
    for (int j = w - v + 1; j <= w; ++j) ys.emplace_back(YKey{"1", x * Monomial::qm(m, j) * Monomial::qm(other, 1)}, -1);
    ch.terms.push_back({YMonomial::from_entries(std::move(ys)), c, v, 0});
  }
  return ch;
}

Character relabel(const std::vector<Term>& terms, const Substitution& sigma) {
  Character ch;
  for (const auto& t : terms) ch.terms.push_back({t.ym.substitute(sigma), Coefficient::one(), t.depth, t.qdeg});
  return ch;
}

}  // namespace qq
