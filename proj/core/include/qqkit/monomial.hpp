#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qq {

enum class GenKind : unsigned char { q1, q2, mu, qfrak, x };

// A named generator of the Laurent ring. Ordering is q1 < q2 < mu < qfrak < x,
// then by node label and index.
struct Generator {
  GenKind kind = GenKind::q1;
  std::string node;  // x(i,a) and qfrak(i); empty for base x and plain qfrak
  int alpha = 0;     // x(i,a) only

  static Generator q1() { return {GenKind::q1, {}, 0}; }
  static Generator q2() { return {GenKind::q2, {}, 0}; }
  static Generator mu() { return {GenKind::mu, {}, 0}; }
  static Generator qfrak() { return {GenKind::qfrak, {}, 0}; }
  static Generator qfrak(std::string node) { return {GenKind::qfrak, std::move(node), 0}; }
  static Generator x() { return {GenKind::x, {}, 0}; }
  static Generator x(std::string node, int alpha) { return {GenKind::x, std::move(node), alpha}; }

  std::string name() const;
  static Generator parse(std::string_view text);

  friend auto operator<=>(const Generator&, const Generator&) = default;
  friend bool operator==(const Generator&, const Generator&) = default;
};

class Monomial;
using Substitution = std::map<Generator, Monomial>;

// Product of generator powers with integer exponents. Entries are sorted by
// generator and carry no zero exponents.
class Monomial {
 public:
  using Entry = std::pair<Generator, int>;

  Monomial() = default;
  explicit Monomial(Generator g, int e = 1);
  static Monomial from_entries(std::vector<Entry> entries);

  static Monomial q1(int e = 1) { return Monomial(Generator::q1(), e); }
  static Monomial q2(int e = 1) { return Monomial(Generator::q2(), e); }
  static Monomial mu(int e = 1) { return Monomial(Generator::mu(), e); }
  static Monomial q(int e = 1) { return q1(e) * q2(e); }
  static Monomial q3(int e = 1) { return mu(e); }
  static Monomial q4(int e = 1) { return mu(-e) * q(e); }
  static Monomial qm(int m, int e = 1) { return m == 1 ? q1(e) : q2(e); }

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_unit() const { return entries_.empty(); }
  int exponent(const Generator& g) const;
  int degree() const;  // sum of exponents

  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;
  Monomial& operator*=(const Monomial& o);
  Monomial inverse() const;
  Monomial pow(int e) const;

  // Replace generators by monomials; unmapped generators stay.
  Monomial substitute(const Substitution& sigma) const;
  // Set every generator satisfying pred to one.
  template <class Pred>
  Monomial drop_if(Pred pred) const {
    Monomial out;
    for (const auto& e : entries_)
      if (!pred(e.first)) out.entries_.push_back(e);
    return out;
  }
  Monomial without(const Generator& g) const {
    return drop_if([&](const Generator& h) { return h == g; });
  }
  bool mentions(GenKind k) const;

  // Split into (primitive root, multiplicity) with the root canonically
  // oriented: m = root^mult, so mult is negative for non-canonical m.
  std::pair<Monomial, int> primitive_root() const;
  // Canonical orientation: the first nonzero exponent is positive.
  bool is_canonical() const { return entries_.empty() || entries_.front().second > 0; }

  std::string to_string() const;
  std::size_t hash() const;

  // Lexicographic group order on exponent vectors, compatible with products.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<Entry> entries_;
};

Monomial parse_monomial(std::string_view text);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace qq
