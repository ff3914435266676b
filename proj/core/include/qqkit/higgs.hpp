#pragma once

#include <string>
#include <vector>

#include "qqkit/engine.hpp"
#include "qqkit/quiver.hpp"
#include "qqkit/ymonomial.hpp"

namespace qq {

// Kirillov-Reshetikhin parameters (x, x q_m^{d}, ..., x q_m^{(k-1)d}) at a
// node of decoration d; m selects q1 or q2.
std::vector<Monomial> kr_params(const Quiver& q, const std::string& node, int k, int m,
                                const Monomial& x = Monomial(Generator::x()));

// x(node,a) -> params[a-1].
Substitution parameter_substitution(const std::string& node, const std::vector<Monomial>& params);

struct HiggsResult {
  Character kept;
  std::vector<Term> dropped;  // original terms whose coefficient vanished
};

// Specialize every coefficient and Y-argument. Terms with vanishing
// coefficient are dropped; two survivors on one Y-monomial raise YCollision.
HiggsResult higgs(const Character& ch, const Substitution& sigma);

// Coefficients to integers as g -> 1, Y-arguments with g set to one, equal
// monomials merged.
ClassicalCharacter classical_limit(const Character& ch, const Generator& g);

// True when the product of the factors equals c.
bool factorize_check(const ClassicalCharacter& c, const std::vector<ClassicalCharacter>& factors);

// w+1 term KR character of A1 with shift q_m.
Character kr_closed_form_A1(int w, int m, const Monomial& x = Monomial(Generator::x()));

// Y-monomials of a term list with the arguments specialized; coefficients set to one.
Character relabel(const std::vector<Term>& terms, const Substitution& sigma);

}  // namespace qq
