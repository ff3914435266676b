#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qqkit/coefficient.hpp"
#include "qqkit/monomial.hpp"
#include "qqkit/poly.hpp"
#include "qqkit/ymonomial.hpp"

namespace qq {

struct Node {
  std::string id;
  int d = 1;  // decoration (relative root length)
};

struct Edge {
  std::string from;
  std::string to;
  Monomial mass;  // mu_e; the unit for massless edges
};

enum class QuiverClass { finite, affine, indefinite };

std::string to_string(QuiverClass c);

class Quiver {
 public:
  Quiver() = default;
  Quiver(std::string name, std::vector<Node> nodes, std::vector<Edge> edges);

  // A1, A2, BC2, A0hat, Arhat(r) (also "Arhat:r").
  static Quiver builtin(std::string_view name);
  static Quiver cyclic(int r);

  const std::string& name() const { return name_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t index_of(const std::string& id) const;
  const Node& node(const std::string& id) const { return nodes_[index_of(id)]; }
  bool has_node(const std::string& id) const;

  QuiverClass classify() const { return class_; }
  // Non-finite quivers grade every reflection by a counting parameter.
  bool has_counting() const { return class_ != QuiverClass::finite; }
  Generator counting_generator(const std::string& node) const;

 private:
  std::string name_;
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  QuiverClass class_ = QuiverClass::finite;

  QuiverClass compute_class() const;
};

// c[j][i] of the deformed Cartan matrix, as Laurent polynomials.
std::vector<std::vector<Poly>> cartan_matrix(const Quiver& q);
// Cartan matrix at q1 = q2 = mu = 1.
std::vector<std::vector<Integer>> classical_cartan(const Quiver& q);
Integer integer_determinant(std::vector<std::vector<Integer>> m);

struct AInverse {
  YMonomial monomial;  // A^{-1}_{i,x}: multiplying by it performs the reflection of Y_{i,x}
  Coefficient scalar;  // counting parameter and loop S-factors
};

AInverse a_inverse_monomial(const Quiver& q, const std::string& node, const Monomial& x);

}  // namespace qq
