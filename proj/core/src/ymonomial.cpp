#include "qqkit/ymonomial.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace qq {

std::string YKey::to_string() const { return "Y(" + node + "," + arg.to_string() + ")"; }

YMonomial::YMonomial(YKey k, int e) {
  if (e != 0) entries_.emplace_back(std::move(k), e);
}

YMonomial YMonomial::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  YMonomial m;
  for (auto& e : entries) {
    if (!m.entries_.empty() && m.entries_.back().first == e.first) {
      m.entries_.back().second += e.second;
      if (m.entries_.back().second == 0) m.entries_.pop_back();
    } else if (e.second != 0) {
      m.entries_.push_back(std::move(e));
    }
  }
  return m;
}

int YMonomial::exponent(const YKey& k) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), k,
                             [](const Entry& e, const YKey& key) { return e.first < key; });
  return (it != entries_.end() && it->first == k) ? it->second : 0;
}

YMonomial YMonomial::operator*(const YMonomial& o) const {
  YMonomial out;
  out.entries_.reserve(entries_.size() + o.entries_.size());
  auto a = entries_.begin(), ae = entries_.end();
  auto b = o.entries_.begin(), be = o.entries_.end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->first < b->first)) {
      out.entries_.push_back(*a++);
    } else if (a == ae || b->first < a->first) {
      out.entries_.push_back(*b++);
    } else {
      int e = a->second + b->second;
      if (e != 0) out.entries_.emplace_back(a->first, e);
      ++a;
      ++b;
    }
  }
  return out;
}

YMonomial YMonomial::inverse() const {
  YMonomial out = *this;
  for (auto& e : out.entries_) e.second = -e.second;
  return out;
}

YMonomial YMonomial::substitute(const Substitution& sigma) const {
  std::vector<Entry> out;
  out.reserve(entries_.size());
  for (const auto& [k, e] : entries_) out.emplace_back(YKey{k.node, k.arg.substitute(sigma)}, e);
  return from_entries(std::move(out));
}

std::string YMonomial::to_string() const {
  if (entries_.empty()) return "1";
  std::string out;
  for (const auto& [k, e] : entries_) {
    if (!out.empty()) out += "*";
    out += k.to_string();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::size_t YMonomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& [k, e] : entries_) {
    h ^= std::hash<std::string>{}(k.node) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= k.arg.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::strong_ordering operator<=>(const YMonomial& a, const YMonomial& b) {
  auto n = std::min(a.entries_.size(), b.entries_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.entries_[i].first <=> b.entries_[i].first; c != 0) return c;
    if (auto c = a.entries_[i].second <=> b.entries_[i].second; c != 0) return c;
  }
  return a.entries_.size() <=> b.entries_.size();
}

const Term* Character::find(const YMonomial& ym) const {
  for (const auto& t : terms)
    if (t.ym == ym) return &t;
  return nullptr;
}

bool same_terms(const Character& a, const Character& b, std::string* why) {
  std::map<YMonomial, const Coefficient*> ma, mb;
  for (const auto& t : a.terms)
    if (!t.coeff.is_zero()) ma[t.ym] = &t.coeff;
  for (const auto& t : b.terms)
    if (!t.coeff.is_zero()) mb[t.ym] = &t.coeff;
  for (const auto& [ym, c] : ma) {
    auto it = mb.find(ym);
    if (it == mb.end()) {
      if (why) *why = "only in first: " + ym.to_string();
      return false;
    }
    if (!c->equals(*it->second)) {
      if (why) *why = "coefficient of " + ym.to_string() + ": " + c->to_string() + " vs " + it->second->to_string();
      return false;
    }
  }
  for (const auto& [ym, c] : mb) {
    if (!ma.count(ym)) {
      if (why) *why = "only in second: " + ym.to_string();
      return false;
    }
  }
  return true;
}

ClassicalCharacter ClassicalCharacter::from_terms(std::vector<ClassicalTerm> terms) {
  std::map<YMonomial, Integer> acc;
  for (auto& t : terms) acc[t.ym] += t.coeff;
  ClassicalCharacter out;
  for (auto& [ym, c] : acc)
    if (c != 0) out.terms.push_back({ym, c});
  return out;
}

ClassicalCharacter ClassicalCharacter::operator*(const ClassicalCharacter& o) const {
  std::vector<ClassicalTerm> prod;
  prod.reserve(terms.size() * o.terms.size());
  for (const auto& a : terms)
    for (const auto& b : o.terms) prod.push_back({a.ym * b.ym, a.coeff * b.coeff});
  return from_terms(std::move(prod));
}

bool operator==(const ClassicalCharacter& a, const ClassicalCharacter& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i)
    if (!(a.terms[i].ym == b.terms[i].ym) || a.terms[i].coeff != b.terms[i].coeff) return false;
  return true;
}

Integer ClassicalCharacter::dimension() const {
  Integer d = 0;
  for (const auto& t : terms) d += t.coeff;
  return d;
}

}  // namespace qq
