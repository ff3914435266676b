#include "qqkit/coefficient.hpp"

#include <map>

#include "qqkit/errors.hpp"

namespace qq {

namespace {

struct Builder {
  Rational content = 1;
  Monomial unit;
  std::map<Monomial, int> factors;
  bool vanished = false;

  void absorb(Monomial arg, int pow) {
    if (pow == 0) return;
    if (arg.is_unit()) {
      if (pow > 0) {
        vanished = true;
        return;
      }
      throw PoleError("denominator factor (1 - 1)");
    }
    if (!arg.is_canonical()) {
      // (1 - m)^p = (-1)^p m^p (1 - 1/m)^p
      if (pow % 2 != 0) content = -content;
      unit *= arg.pow(pow);
      arg = arg.inverse();
    }
    auto it = factors.find(arg);
    if (it == factors.end()) {
      factors.emplace(std::move(arg), pow);
    } else if ((it->second += pow) == 0) {
      factors.erase(it);
    }
  }

  std::vector<BinomialFactor> factor_list() const {
    std::vector<BinomialFactor> out;
    out.reserve(factors.size());
    for (const auto& [m, e] : factors) out.push_back({m, e});
    return out;
  }
};

Rational rational_pow(const Rational& base, int e) {
  Rational out = 1;
  Rational b = e >= 0 ? base : Rational(1) / base;
  for (int k = 0; k < (e >= 0 ? e : -e); ++k) out *= b;
  return out;
}

}  // namespace

Coefficient Coefficient::constant(const Rational& c) { return monomial(Monomial(), c); }

Coefficient Coefficient::monomial(const Monomial& m, const Rational& c) {
  Coefficient out;
  if (c == 0) return out;
  out.kind_ = Kind::factored;
  out.content_ = c;
  out.unit_ = m;
  out.content_.canonicalize();
  return out;
}

Coefficient Coefficient::binomial(const Monomial& arg, int pow) {
  return from_parts(Rational(1), Monomial(), {{arg, pow}});
}

Coefficient Coefficient::from_parts(const Rational& content, const Monomial& unit,
                                    const std::vector<BinomialFactor>& factors) {
  if (content == 0) return {};
  Builder b;
  b.content = content;
  b.unit = unit;
  for (const auto& f : factors) b.absorb(f.arg, f.pow);
  if (b.vanished) return {};
  Coefficient out;
  out.kind_ = Kind::factored;
  out.content_ = b.content;
  out.unit_ = b.unit;
  out.factors_ = b.factor_list();
  return out;
}

Coefficient Coefficient::from_poly(const Poly& p) {
  if (p.is_zero()) return {};
  return normalize_general(Rational(1), Monomial(), {}, p);
}

Coefficient Coefficient::normalize_general(Rational content, Monomial unit,
                                           std::vector<BinomialFactor> factors, Poly residual) {
  if (residual.is_zero() || content == 0) return {};
  for (auto& f : factors) {
    while (f.pow < 0) {
      auto q = residual.divide_binomial(f.arg);
      if (!q) break;
      residual = std::move(*q);
      ++f.pow;
    }
  }
  // Pull the leading term out so the residual is monic with leading monomial 1.
  auto lead = std::prev(residual.terms().end());
  Rational lc = lead->second;
  Monomial lm = lead->first;
  residual = residual.scaled(Rational(1) / lc, lm.inverse());
  content *= lc;
  unit *= lm;
  if (residual.size() == 2 && std::next(residual.terms().begin())->first.is_unit() &&
      residual.terms().begin()->second == -1) {
    // 1 - m is itself a binomial factor.
    factors.push_back({residual.terms().begin()->first, 1});
    return from_parts(content, unit, factors);
  }
  Coefficient out = from_parts(content, unit, factors);
  if (residual.is_monomial()) return out;
  out.kind_ = Kind::general;
  out.residual_ = std::move(residual);
  return out;
}

Coefficient Coefficient::prefix() const {
  Coefficient out = *this;
  if (out.kind_ == Kind::general) {
    out.kind_ = Kind::factored;
    out.residual_ = Poly();
  }
  return out;
}

Coefficient Coefficient::operator*(const Coefficient& o) const {
  if (is_zero() || o.is_zero()) return {};
  Builder b;
  b.content = content_ * o.content_;
  b.unit = unit_ * o.unit_;
  for (const auto& f : factors_) b.absorb(f.arg, f.pow);
  for (const auto& f : o.factors_) b.absorb(f.arg, f.pow);
  if (kind_ == Kind::general || o.kind_ == Kind::general) {
    Poly r = kind_ == Kind::general ? residual_ : Poly::one();
    if (o.kind_ == Kind::general) r = r * o.residual_;
    return normalize_general(b.content, b.unit, b.factor_list(), r);
  }
  Coefficient out;
  out.kind_ = Kind::factored;
  out.content_ = b.content;
  out.unit_ = b.unit;
  out.factors_ = b.factor_list();
  return out;
}

Coefficient Coefficient::inverse() const {
  if (is_zero()) throw PoleError("inverse of zero coefficient");
  if (kind_ == Kind::general)
    throw NonFactoredLimitError("cannot invert a coefficient with a polynomial residual");
  Coefficient out = *this;
  out.content_ = Rational(1) / content_;
  out.unit_ = unit_.inverse();
  for (auto& f : out.factors_) f.pow = -f.pow;
  return out;
}

Coefficient Coefficient::operator/(const Coefficient& o) const { return *this * o.inverse(); }

Coefficient Coefficient::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Coefficient out = one();
  for (int k = 0; k < e; ++k) out *= *this;
  return out;
}

Coefficient Coefficient::operator-() const {
  Coefficient out = *this;
  out.content_ = -out.content_;
  return out;
}

Coefficient Coefficient::operator+(const Coefficient& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  // Common part: the smaller power of every binomial on either side.
  std::map<Monomial, std::pair<int, int>> pows;
  for (const auto& f : factors_) pows[f.arg].first = f.pow;
  for (const auto& f : o.factors_) pows[f.arg].second = f.pow;
  std::vector<BinomialFactor> common;
  Poly pa(content_, unit_), pb(o.content_, o.unit_);
  for (const auto& [m, ab] : pows) {
    int g = std::min(ab.first, ab.second);
    if (g != 0) common.push_back({m, g});
    if (ab.first > g) pa = pa * Poly::binomial_power(m, ab.first - g);
    if (ab.second > g) pb = pb * Poly::binomial_power(m, ab.second - g);
  }
  if (kind_ == Kind::general) pa = pa * residual_;
  if (o.kind_ == Kind::general) pb = pb * o.residual_;
  Poly sum = pa + pb;
  if (sum.is_zero()) return {};
  return normalize_general(Rational(1), Monomial(), std::move(common), std::move(sum));
}

Coefficient Coefficient::operator-(const Coefficient& o) const { return *this + (-o); }

bool Coefficient::same_form(const Coefficient& o) const {
  return kind_ == o.kind_ && content_ == o.content_ && unit_ == o.unit_ &&
         factors_ == o.factors_ && residual_ == o.residual_;
}

bool Coefficient::equals(const Coefficient& o) const {
  if (same_form(o)) return true;
  if (is_zero() || o.is_zero()) return false;
  return (*this - o).is_zero();
}

namespace {

struct Vanishing {
  Monomial arg;
  int pow;
};

// Finite value contributed by binomials whose arguments specialize to one.
Coefficient resolve_vanishing(const std::vector<Vanishing>& vs) {
  if (vs.empty()) return Coefficient::one();
  int zeros = 0, poles = 0, net = 0;
  for (const auto& v : vs) {
    (v.pow > 0 ? zeros : poles) += v.pow > 0 ? v.pow : -v.pow;
    net += v.pow;
  }
  auto root = vs.front().arg.primitive_root().first;
  bool collinear = true;
  Rational ratio = 1;
  for (const auto& v : vs) {
    auto [r, k] = v.arg.primitive_root();
    if (!(r == root)) {
      collinear = false;
      break;
    }
    ratio *= rational_pow(Rational(k), v.pow);
  }
  if (collinear) {
    if (net > 0) return {};
    if (net < 0) throw PoleError("pole of order " + std::to_string(-net) + " along " + root.to_string() + " = 1");
    return Coefficient::constant(ratio);
  }
  if (poles == 0) return {};
  throw PoleError("indeterminate: " + std::to_string(zeros) + " vanishing numerator and " +
                  std::to_string(poles) + " vanishing denominator factors in independent directions");
}

}  // namespace

Coefficient Coefficient::specialize(const Substitution& sigma) const {
  if (is_zero()) return {};
  std::vector<BinomialFactor> facs = factors_;
  Poly residual = kind_ == Kind::general ? residual_ : Poly::one();
  if (kind_ == Kind::general) {
    // Cancel vanishing denominators against the residual where they divide it.
    for (auto& f : facs) {
      if (f.pow >= 0 || !f.arg.substitute(sigma).is_unit()) continue;
      while (f.pow < 0) {
        auto q = residual.divide_binomial(f.arg);
        if (!q) break;
        residual = std::move(*q);
        ++f.pow;
      }
    }
    Poly image = residual.substitute(sigma);
    if (image.is_zero()) {
      for (const auto& f : facs)
        if (f.pow < 0 && f.arg.substitute(sigma).is_unit())
          throw NonFactoredLimitError("residual polynomial and a denominator both vanish");
      return {};
    }
    residual = std::move(image);
  }
  Builder b;
  b.content = content_;
  b.unit = unit_.substitute(sigma);
  std::vector<Vanishing> vanishing;
  for (const auto& f : facs) {
    Monomial a = f.arg.substitute(sigma);
    if (a.is_unit())
      vanishing.push_back({f.arg, f.pow});
    else
      b.absorb(a, f.pow);
  }
  Coefficient finite = resolve_vanishing(vanishing);
  if (finite.is_zero()) return {};
  Coefficient out;
  out.kind_ = Kind::factored;
  out.content_ = b.content;
  out.unit_ = b.unit;
  out.factors_ = b.factor_list();
  out = out * finite;
  if (kind_ == Kind::general) out = out * from_poly(residual);
  return out;
}

Coefficient Coefficient::limit_at_unity(const Generator& g) const {
  return specialize(Substitution{{g, Monomial()}});
}

std::optional<Rational> Coefficient::constant_value() const {
  if (is_zero()) return Rational(0);
  if (kind_ == Kind::factored && unit_.is_unit() && factors_.empty()) return content_;
  return std::nullopt;
}

int Coefficient::qfrak_degree() const {
  int d = 0;
  for (const auto& [g, e] : unit_.entries())
    if (g.kind == GenKind::qfrak) d += e;
  return d;
}

std::pair<Poly, Poly> Coefficient::as_fraction() const {
  if (is_zero()) return {Poly(), Poly::one()};
  Poly num(content_, unit_), den = Poly::one();
  for (const auto& f : factors_) {
    if (f.pow > 0)
      num = num * Poly::binomial_power(f.arg, f.pow);
    else
      den = den * Poly::binomial_power(f.arg, -f.pow);
  }
  if (kind_ == Kind::general) num = num * residual_;
  return {num, den};
}

std::string Coefficient::to_string() const {
  if (is_zero()) return "0";
  std::string out = rational_to_string(content_);
  if (!unit_.is_unit()) out += "*" + unit_.to_string();
  for (const auto& f : factors_) {
    out += "*(1-" + f.arg.to_string() + ")";
    if (f.pow != 1) out += "^" + std::to_string(f.pow);
  }
  if (kind_ == Kind::general) out += "*(" + residual_.to_string() + ")";
  return out;
}

Coefficient s_function(const Monomial& z) { return s_function_r(z, 1); }

Coefficient s_function_r(const Monomial& z, int r) {
  if (r < 1) throw ValidationError("S_r needs r >= 1");
  const Monomial q1r = Monomial::q1(r);
  const Monomial q2 = Monomial::q2();
  if (z.is_unit() || z == q1r * q2)
    throw PoleError("S_" + std::to_string(r) + " pole at z = " + z.to_string());
  return Coefficient::from_parts(
      Rational(1), Monomial(),
      {{z / q1r, 1}, {z / q2, 1}, {z, -1}, {z / (q1r * q2), -1}});
}

}  // namespace qq
