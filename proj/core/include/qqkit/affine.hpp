#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qqkit/coefficient.hpp"
#include "qqkit/engine.hpp"
#include "qqkit/quiver.hpp"

namespace qq {

// Weakly decreasing positive parts. Box s = (s1, s2): s1 runs along a row
// (the q3 direction), s2 labels the row (the q4 direction).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }
  int row(int k) const;  // lambda_k, zero past the end; k >= 1
  int col(int k) const;  // transpose lambda^T_k
  bool contains(int s1, int s2) const { return s2 >= 1 && s1 >= 1 && row(s2) >= s1; }
  Partition transpose() const;
  std::vector<std::pair<int, int>> boxes() const;
  std::vector<std::pair<int, int>> addable() const;
  std::vector<std::pair<int, int>> removable() const;
  std::string to_string() const;

  static std::vector<Partition> all_of_size(int n);
  static std::vector<Partition> all_up_to(int n);

  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct BoxStats {
  int arm = 0;   // lambda_{s2} - s1
  int leg = 0;   // lambda^T_{s1} - s2
  int hook = 0;  // arm + leg + 1
};

// Defined for any box; arm and leg go negative outside the diagram.
BoxStats box_stats(const Partition& l, int s1, int s2);
// x q3^{s1-1} q4^{s2-1}
Monomial box_content(const Monomial& x, int s1, int s2);

enum class ZForm { first, second };

// Diagonal factor; r > 1 keeps only boxes with hook in rZ.
Coefficient z_partition(const Partition& l, int r = 1, ZForm form = ZForm::first);
Coefficient z_A0(const Partition& l, ZForm form = ZForm::first);
Coefficient z_Ar(const Partition& l, int r, ZForm form = ZForm::first);

// One member of a partition tuple: node index (color offset), parameter, diagram.
struct Component {
  int node = 0;
  Monomial x;
  Partition lambda;
};

// Cross factor between components a (alpha) and b (beta), alpha < beta.
Coefficient z_pair(const Component& a, const Component& b, int r = 1, ZForm form = ZForm::first);
Coefficient z_tuple(const std::vector<Component>& comps, int r = 1, ZForm form = ZForm::first);
Coefficient z_A0_tuple(const std::vector<Partition>& ls, const std::vector<Monomial>& xs);

// Y-monomial and colored counting weight of a tuple on the cyclic quiver.
YMonomial tuple_ymonomial(const Quiver& q, const std::vector<Component>& comps);
Monomial tuple_weight(const Quiver& q, const std::vector<Component>& comps);

// Number of nodes when q is the cyclic quiver with uniform mass mu; throws otherwise.
int cyclic_rank(const Quiver& q);

// Sum over partition tuples of total size <= max_degree.
Character affine_character(const Quiver& q, const WeightConfig& w, int max_degree, unsigned threads = 0);

// Pit: true iff the box (i,j) is not in lambda.
bool pit_filter(const Partition& l, int i, int j);
// Throws InvalidPit unless i, j >= 1 and i+j-1 is in rZ.
void check_pit(int i, int j, int r);
// Exact substitution realizing q3^i q4^{1-j} = q1 on (q1, q2, mu).
Substitution pit_resonance(int i, int j, int r = 1);
// Recover the pit from a resonance written as relation = 1 in (q1, q2, mu).
std::optional<std::pair<int, int>> resonance_to_pit(const Monomial& relation);

// Burge: lambda_{beta,k} - lambda_{alpha,k+j-1} >= i for all k >= 1.
bool burge_filter(const Partition& alpha, const Partition& beta, int i, int j);
// Colored residue rule: i + j - 1 - (node_alpha - node_beta) in rZ.
bool burge_applies(int i, int j, int node_alpha, int node_beta, int r);
// x_beta -> x_alpha q1 q3^{-i} q4^{j-1}.
Substitution burge_resonance(const Monomial& x_alpha, const Generator& x_beta, int i, int j);

struct EquivalenceReport {
  std::size_t checked = 0;
  std::size_t vanishing = 0;
  std::size_t exceptions = 0;
  std::vector<std::string> samples;  // first few exceptions
};

// Resonance vanishing of the diagonal factor versus the pit filter.
EquivalenceReport pit_equivalence(int r, int i, int j, int max_size);
// Resonance vanishing of the pair factor versus the Burge filter.
EquivalenceReport burge_equivalence(int r, int i, int j, int node_alpha, int node_beta, int max_size,
                                    unsigned threads = 0);

}  // namespace qq
