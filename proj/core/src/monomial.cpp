#include "qqkit/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

#include "qqkit/errors.hpp"

namespace qq {

std::string Generator::name() const {
  switch (kind) {
    case GenKind::q1: return "q1";
    case GenKind::q2: return "q2";
    case GenKind::mu: return "mu";
    case GenKind::qfrak: return node.empty() ? "qfrak" : "qfrak(" + node + ")";
    case GenKind::x:
      if (node.empty()) return "x";
      return "x(" + node + "," + std::to_string(alpha) + ")";
  }
  return "?";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view context) {
  s = trim(s);
  int v = 0;
  auto first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ValidationError("bad integer '" + std::string(s) + "' in " + std::string(context));
  return v;
}

}  // namespace

Generator Generator::parse(std::string_view text) {
  auto s = trim(text);
  if (s == "q1") return q1();
  if (s == "q2") return q2();
  if (s == "mu") return mu();
  if (s == "qfrak") return qfrak();
  if (s == "x") return x();
  auto open = s.find('(');
  if (open != std::string_view::npos && s.back() == ')') {
    auto head = s.substr(0, open);
    auto inner = s.substr(open + 1, s.size() - open - 2);
    if (head == "qfrak" && !trim(inner).empty()) return qfrak(std::string(trim(inner)));
    if (head == "x") {
      auto comma = inner.rfind(',');
      if (comma != std::string_view::npos) {
        auto node = trim(inner.substr(0, comma));
        int a = parse_int(inner.substr(comma + 1), text);
        if (!node.empty() && a >= 1) return x(std::string(node), a);
      }
    }
  }
  throw ValidationError("unknown generator '" + std::string(text) + "'");
}

Monomial::Monomial(Generator g, int e) {
  if (e != 0) entries_.emplace_back(std::move(g), e);
}

Monomial Monomial::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  Monomial m;
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

int Monomial::exponent(const Generator& g) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), g,
                             [](const Entry& e, const Generator& k) { return e.first < k; });
  return (it != entries_.end() && it->first == g) ? it->second : 0;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& e : entries_) d += e.second;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out;
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

Monomial Monomial::operator/(const Monomial& o) const { return *this * o.inverse(); }

Monomial& Monomial::operator*=(const Monomial& o) { return *this = *this * o; }

Monomial Monomial::inverse() const { return pow(-1); }

Monomial Monomial::pow(int e) const {
  Monomial out;
  if (e == 0) return out;
  out.entries_ = entries_;
  for (auto& x : out.entries_) x.second *= e;
  return out;
}

Monomial Monomial::substitute(const Substitution& sigma) const {
  if (sigma.empty()) return *this;
  Monomial out;
  std::vector<Entry> kept;
  for (const auto& [g, e] : entries_) {
    auto it = sigma.find(g);
    if (it == sigma.end())
      kept.emplace_back(g, e);
    else
      out *= it->second.pow(e);
  }
  return out * from_entries(std::move(kept));
}

bool Monomial::mentions(GenKind k) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [k](const Entry& e) { return e.first.kind == k; });
}

std::pair<Monomial, int> Monomial::primitive_root() const {
  if (entries_.empty()) return {Monomial(), 0};
  int g = 0;
  for (const auto& e : entries_) g = std::gcd(g, e.second);
  if (entries_.front().second < 0) g = -g;
  Monomial root;
  root.entries_ = entries_;
  for (auto& e : root.entries_) e.second /= g;
  return {root, g};
}

std::string Monomial::to_string() const {
  if (entries_.empty()) return "1";
  std::string out;
  for (const auto& [g, e] : entries_) {
    if (!out.empty()) out += "*";
    out += g.name();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const auto& [g, e] : entries_) {
    mix(static_cast<std::size_t>(g.kind));
    mix(std::hash<std::string>{}(g.node));
    mix(static_cast<std::size_t>(g.alpha));
    mix(static_cast<std::size_t>(e));
  }
  return h;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  auto x = a.entries_.begin(), xe = a.entries_.end();
  auto y = b.entries_.begin(), ye = b.entries_.end();
  while (x != xe || y != ye) {
    if (y == ye || (x != xe && x->first < y->first)) {
      return x->second > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (x == xe || y->first < x->first) {
      return y->second > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (x->second != y->second) return x->second <=> y->second;
    ++x;
    ++y;
  }
  return std::strong_ordering::equal;
}

Monomial parse_monomial(std::string_view text) {
  std::vector<Monomial::Entry> entries;
  std::string s(text);
  std::size_t i = 0;
  auto spaces = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  // Factors are separated by '*' or whitespace; a '*' must sit between two factors.
  auto separator = [&] {
    spaces();
    if (i < s.size() && s[i] == '*') {
      ++i;
      spaces();
      if (i >= s.size() || s[i] == '*') throw ValidationError("dangling '*' in '" + s + "'");
    }
  };
  spaces();
  if (i < s.size() && s[i] == '*') throw ValidationError("dangling '*' in '" + s + "'");
  while (i < s.size()) {
    std::size_t start = i;
    int depth = 0;
    while (i < s.size()) {
      char c = s[i];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth == 0 && (c == '^' || c == '*' || std::isspace(static_cast<unsigned char>(c)))) break;
      ++i;
    }
    std::string name = s.substr(start, i - start);
    int e = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      std::size_t es = i;
      if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
      if (i < s.size() && s[i] == '(') {
        auto close = s.find(')', i);
        if (close == std::string::npos) throw ValidationError("unbalanced exponent in '" + s + "'");
        e = parse_int(std::string_view(s).substr(i + 1, close - i - 1), text);
        if (s[es] == '-') e = -e;
        i = close + 1;
      } else {
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        e = parse_int(std::string_view(s).substr(es, i - es), text);
      }
    }
    if (name != "1") entries.emplace_back(Generator::parse(name), e);
    separator();
  }
  return Monomial::from_entries(std::move(entries));
}

}  // namespace qq
