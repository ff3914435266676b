#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qqkit/quiver.hpp"
#include "qqkit/ymonomial.hpp"

namespace qq {

// One Y-factor per entry: (node, spectral parameter).
struct WeightConfig {
  std::vector<std::pair<std::string, Monomial>> params;

  // Free parameters x(i,1), ..., x(i,w_i) for each node.
  static WeightConfig generic(const Quiver& q, const std::vector<std::pair<std::string, int>>& w);
  YMonomial highest_weight() const;
  void validate(const Quiver& q) const;
};

struct ExpandStats {
  std::size_t reflections = 0;      // children generated with nonzero coefficient
  std::size_t pruned = 0;           // children dropped for a vanishing coefficient
  std::size_t merges = 0;           // children that reached an existing term
  std::size_t path_mismatches = 0;  // merges whose coefficients disagreed
};

struct ExpandOptions {
  // Stop reflecting terms of this many reflections (the counting degree on
  // affine quivers). Required for non-finite quivers.
  std::optional<int> max_degree;
  std::size_t max_terms = 1'000'000;
  unsigned threads = 0;
  ExpandStats* stats = nullptr;
};

// Coefficient multiplying the child produced by reflecting `key` in `ym`.
Coefficient reflection_coefficient(const Quiver& q, const YMonomial& ym, const YKey& key);

// The full iWeyl orbit of the highest weight, level by level.
Character expand(const Quiver& q, const WeightConfig& w, const ExpandOptions& opt = {});

// Subset-sum formula for A1 with the given parameters on node "1".
Character closed_form_A1(const std::vector<Monomial>& x);

}  // namespace qq
