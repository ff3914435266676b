#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

#include "qqkit/monomial.hpp"

namespace qq {

using Integer = mpz_class;
using Rational = mpq_class;

// Sparse Laurent polynomial with rational coefficients, keyed by the group
// order on monomials.
class Poly {
 public:
  using Map = std::map<Monomial, Rational>;

  Poly() = default;
  explicit Poly(Rational c, Monomial m = {});
  static Poly one() { return Poly(Rational(1)); }
  // (1 - m)^e for e >= 0, expanded.
  static Poly binomial_power(const Monomial& m, int e);

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_monomial() const { return terms_.size() == 1; }

  void add_term(const Monomial& m, const Rational& c);
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rational& c, const Monomial& m = {}) const;

  // Exact division by (1 - m); nullopt when it does not divide.
  std::optional<Poly> divide_binomial(const Monomial& m) const;
  Poly substitute(const Substitution& sigma) const;

  std::string to_string() const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

 private:
  Map terms_;
};

std::string rational_to_string(const Rational& r);

}  // namespace qq
