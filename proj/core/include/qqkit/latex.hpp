#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qqkit/engine.hpp"
#include "qqkit/quiver.hpp"
#include "qqkit/ymonomial.hpp"

namespace qq {

// Two-way naming between parameter generators and LaTeX symbols such as x_1.
struct LatexNames {
  std::map<Generator, std::string> names;
  // Node used for Y-factors written without a node label; empty means the
  // label is mandatory.
  std::string default_node;

  // x_1, ..., x_n for the parameters of w in order ("x" when there is one);
  // single-node quivers drop the node label.
  static LatexNames for_weights(const Quiver& q, const WeightConfig& w);
  // Only the base generator x.
  static LatexNames base(const Quiver& q);
  void add(const Generator& g, std::string name) { names[g] = std::move(name); }
  std::string name_of(const Generator& g) const;
  // Inverse lookup; throws ValidationError for unknown names.
  Generator generator_of(const std::string& name) const;
};

std::string latex_monomial(const Monomial& m, const LatexNames& n);
std::string latex_ykey(const YKey& k, const LatexNames& n);
// Products of S and S_r factors where recognizable, explicit binomials otherwise.
std::string latex_coefficient(const Coefficient& c, const LatexNames& n, int max_r = 2);
std::string to_latex(const Character& ch, const LatexNames& n, int max_r = 2);
std::string to_latex(const ClassicalCharacter& ch, const LatexNames& n);

// One sum of Y-monomials as written in the source text; equal monomials merge.
using TermSum = std::map<YMonomial, Coefficient>;

// Parses the LaTeX subset used for displayed characters: \mathsf{Y}, \mathscr{S},
// \mathscr{S}_r, \frac, \qty(...), integers, parameter and q symbols, and the
// shorthand Y_{i,x;j,k} = Y_{i, x q1^j q2^k}. Sides separated by top-level
// '=' are returned separately. Throws ValidationError on anything else.
std::vector<TermSum> parse_latex(std::string_view text, const LatexNames& n);
Monomial parse_latex_monomial(std::string_view text, const LatexNames& n);

Character to_character(const TermSum& s);
// Requires integer coefficients.
ClassicalCharacter to_classical(const TermSum& s);

// Graphviz digraph; node identity is the canonical monomial hash.
std::string hasse_dot(const Character& ch, const LatexNames& n);
std::string to_text(const Character& ch);
std::string to_text(const ClassicalCharacter& ch);

}  // namespace qq
