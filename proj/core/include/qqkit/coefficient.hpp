#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qqkit/monomial.hpp"
#include "qqkit/poly.hpp"

namespace qq {

// (1 - arg)^pow with arg canonically oriented and not the unit.
struct BinomialFactor {
  Monomial arg;
  int pow = 0;
  friend bool operator==(const BinomialFactor&, const BinomialFactor&) = default;
};

// Exact rational function in the generators.
//
// Factored: content * unit * prod (1 - arg_k)^pow_k.
// General:  the same prefix times a residual Laurent polynomial that is not a
//           single term. Produced only by addition.
class Coefficient {
 public:
  enum class Kind { zero, factored, general };

  Coefficient() = default;  // zero
  static Coefficient zero() { return {}; }
  static Coefficient one() { return constant(Rational(1)); }
  static Coefficient constant(const Rational& c);
  static Coefficient monomial(const Monomial& m, const Rational& c = 1);
  static Coefficient binomial(const Monomial& arg, int pow = 1);
  static Coefficient from_parts(const Rational& content, const Monomial& unit,
                                const std::vector<BinomialFactor>& factors);
  static Coefficient from_poly(const Poly& p);

  Kind kind() const { return kind_; }
  bool is_zero() const { return kind_ == Kind::zero; }
  const Rational& content() const { return content_; }
  const Monomial& unit() const { return unit_; }
  const std::vector<BinomialFactor>& factors() const { return factors_; }
  const Poly& residual() const { return residual_; }

  Coefficient operator*(const Coefficient& o) const;
  Coefficient operator/(const Coefficient& o) const;
  Coefficient operator+(const Coefficient& o) const;
  Coefficient operator-(const Coefficient& o) const;
  Coefficient operator-() const;
  Coefficient& operator*=(const Coefficient& o) { return *this = *this * o; }
  Coefficient& operator+=(const Coefficient& o) { return *this = *this + o; }
  Coefficient pow(int e) const;
  Coefficient inverse() const;

  // Exact equality of rational functions.
  bool equals(const Coefficient& o) const;
  // Same stored representation.
  bool same_form(const Coefficient& o) const;

  // Substitute generators by monomials. Vanishing numerator factors give
  // zero, vanishing denominators give PoleError; matched orders along a
  // common direction give the finite ratio of orders.
  Coefficient specialize(const Substitution& sigma) const;
  // Limit as g -> 1.
  Coefficient limit_at_unity(const Generator& g) const;

  std::optional<Rational> constant_value() const;
  int qfrak_degree() const;
  // Numerator and denominator expanded as polynomials (small inputs only).
  std::pair<Poly, Poly> as_fraction() const;

  std::string to_string() const;

 private:
  Kind kind_ = Kind::zero;
  Rational content_ = 0;
  Monomial unit_;
  std::vector<BinomialFactor> factors_;
  Poly residual_;

  static Coefficient normalize_general(Rational content, Monomial unit,
                                       std::vector<BinomialFactor> factors, Poly residual);
  Coefficient prefix() const;
};

// S(z) = (1 - z/q1)(1 - z/q2) / ((1 - z)(1 - z/q)).
Coefficient s_function(const Monomial& z);
// S_r(z) = (1 - z/q1^r)(1 - z/q2) / ((1 - z)(1 - z/(q1^r q2))).
Coefficient s_function_r(const Monomial& z, int r);

}  // namespace qq
