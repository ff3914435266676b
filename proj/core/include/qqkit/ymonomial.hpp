#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qqkit/coefficient.hpp"
#include "qqkit/monomial.hpp"

namespace qq {

// Y_{node, arg}.
struct YKey {
  std::string node;
  Monomial arg;
  friend std::strong_ordering operator<=>(const YKey& a, const YKey& b) {
    if (auto c = a.node <=> b.node; c != 0) return c;
    return a.arg <=> b.arg;
  }
  friend bool operator==(const YKey& a, const YKey& b) { return a.node == b.node && a.arg == b.arg; }
  std::string to_string() const;
};

class YMonomial {
 public:
  using Entry = std::pair<YKey, int>;

  YMonomial() = default;
  explicit YMonomial(YKey k, int e = 1);
  static YMonomial from_entries(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_unit() const { return entries_.empty(); }
  int exponent(const YKey& k) const;

  YMonomial operator*(const YMonomial& o) const;
  YMonomial operator/(const YMonomial& o) const { return *this * o.inverse(); }
  YMonomial& operator*=(const YMonomial& o) { return *this = *this * o; }
  YMonomial inverse() const;

  // Apply a substitution to every argument; equal keys merge.
  YMonomial substitute(const Substitution& sigma) const;

  std::string to_string() const;
  std::size_t hash() const;

  friend std::strong_ordering operator<=>(const YMonomial& a, const YMonomial& b);
  friend bool operator==(const YMonomial& a, const YMonomial& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<Entry> entries_;
};

struct YMonomialHash {
  std::size_t operator()(const YMonomial& m) const { return m.hash(); }
};

struct Term {
  YMonomial ym;
  Coefficient coeff;
  int depth = 0;  // number of reflections from the highest weight
  int qdeg = 0;   // counting-parameter degree
};

struct HasseEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  YKey label;  // the reflected Y-factor
};

struct Character {
  std::vector<Term> terms;
  std::vector<HasseEdge> edges;

  std::size_t size() const { return terms.size(); }
  const Term* find(const YMonomial& ym) const;
};

// Exact comparison as maps from Y-monomial to coefficient. On mismatch the
// optional message names the first differing term.
bool same_terms(const Character& a, const Character& b, std::string* why = nullptr);

struct ClassicalTerm {
  YMonomial ym;
  Integer coeff;
};

struct ClassicalCharacter {
  std::vector<ClassicalTerm> terms;  // sorted by Y-monomial, no zero coefficients
  static ClassicalCharacter from_terms(std::vector<ClassicalTerm> terms);
  ClassicalCharacter operator*(const ClassicalCharacter& o) const;
  friend bool operator==(const ClassicalCharacter& a, const ClassicalCharacter& b);
  Integer dimension() const;  // sum of coefficients
};

}  // namespace qq
