#include "qqkit/poly.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace qq {

Poly::Poly(Rational c, Monomial m) {
  if (c != 0) terms_.emplace(std::move(m), std::move(c));
}

Poly Poly::binomial_power(const Monomial& m, int e) {
  Poly base;
  base.add_term(Monomial(), 1);
  base.add_term(m, -1);
  Poly out = one();
  for (int k = 0; k < e; ++k) out = out * base;
  return out;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& kv : out.terms_) kv.second = -kv.second;
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  Poly out;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) out.add_term(m1 * m2, c1 * c2);
  return out;
}

Poly Poly::scaled(const Rational& c, const Monomial& m) const {
  Poly out;
  if (c == 0) return out;
  for (const auto& [k, v] : terms_) out.terms_.emplace(k * m, v * c);
  return out;
}

std::optional<Poly> Poly::divide_binomial(const Monomial& m) const {
  if (m.is_unit()) return std::nullopt;
  if (terms_.empty()) return Poly();
  // Orient so that m > 1: then -m leads the divisor and 1 trails it.
  Monomial g = m;
  bool flipped = false;
  if (!g.is_canonical()) {
    g = m.inverse();
    flipped = true;
  }
  // Terms split into lines t h^Z along the primitive direction h of g. On each
  // line the quotient cannot reach below the lowest term of the dividend.
  const Monomial h = g.primitive_root().first;
  const Generator& lead = h.entries().front().first;
  const int step = h.entries().front().second;
  auto floor_div = [](int a, int b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); };
  auto line = [&](const Monomial& t) {
    const int pos = floor_div(t.exponent(lead), step);
    return std::pair{t / h.pow(pos), pos};
  };
  std::map<Monomial, int> lowest;
  for (const auto& [t, c] : terms_) {
    auto [key, pos] = line(t);
    auto [it, fresh] = lowest.try_emplace(key, pos);
    if (!fresh) it->second = std::min(it->second, pos);
  }
  Poly rem = *this;
  Poly quot;
  while (!rem.is_zero()) {
    auto it = std::prev(rem.terms_.end());
    Monomial t = it->first;
    Rational c = it->second;
    Monomial qt = t / g;
    auto [key, pos] = line(qt);
    auto low = lowest.find(key);
    if (low == lowest.end() || pos < low->second) return std::nullopt;
    // rem -= (-c qt) (1 - g)
    quot.add_term(qt, -c);
    rem.add_term(t, -c);
    rem.add_term(qt, c);
  }
  // this = (1-g) quot; with m = g^{-1}: (1-g) = -g (1-m), so this/(1-m) = -g quot.
  if (!flipped) return quot;
  return quot.scaled(Rational(-1), g);
}

Poly Poly::substitute(const Substitution& sigma) const {
  Poly out;
  for (const auto& [m, c] : terms_) out.add_term(m.substitute(sigma), c);
  return out;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_unit()) {
      out += rational_to_string(a);
    } else {
      if (a != 1) out += rational_to_string(a) + "*";
      out += m.to_string();
    }
  }
  return out;
}

}  // namespace qq
