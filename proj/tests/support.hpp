#pragma once

#include <random>
#include <string>
#include <vector>

#include "qqkit/coefficient.hpp"
#include "qqkit/engine.hpp"
#include "qqkit/monomial.hpp"
#include "qqkit/verify.hpp"

namespace qqtest {

inline std::mt19937& rng() {
  static std::mt19937 gen(20240917u);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

// Exponents of q1, q2 and x drawn from [lo, hi].
inline qq::Monomial random_monomial(int lo = -4, int hi = 4) {
  return qq::Monomial::from_entries({{qq::Generator::q1(), uniform(lo, hi)},
                                     {qq::Generator::q2(), uniform(lo, hi)},
                                     {qq::Generator::x(), uniform(lo, hi)}});
}

// Random nonzero coefficient; sums make General forms appear.
inline qq::Coefficient random_coefficient() {
  using qq::Coefficient;
  Coefficient c = Coefficient::constant(qq::Rational(uniform(1, 5), uniform(1, 3)));
  c *= Coefficient::monomial(random_monomial(-2, 2));
  for (int k = uniform(0, 2); k > 0; --k) {
    qq::Monomial z = random_monomial(-2, 2);
    if (z.is_unit() || z == qq::Monomial::q()) continue;
    c *= qq::s_function(z);
  }
  if (uniform(0, 2) == 0) c += Coefficient::monomial(random_monomial(-1, 1), uniform(1, 3));
  if (c.is_zero()) c = Coefficient::one();
  return c;
}

inline std::vector<qq::Monomial> a1_params(int w) {
  std::vector<qq::Monomial> xs;
  for (int a = 1; a <= w; ++a) xs.emplace_back(qq::Generator::x("1", a));
  return xs;
}

inline const std::vector<qq::Fixture>& corpus() {
  static const std::vector<qq::Fixture> c = qq::load_corpus(QQKIT_FIXTURE_DIR);
  return c;
}

inline const qq::Fixture& fixture(const std::string& name) {
  for (const auto& f : corpus())
    if (f.name == name) return f;
  throw std::runtime_error("no fixture " + name);
}

}  // namespace qqtest
