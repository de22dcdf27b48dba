#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mergetree/good_map.hpp"

namespace mt {

struct UnlabeledOptions {
  /// Maximum number of partial placements explored by one feasibility test.
  std::uint64_t budget = 1'000'000;
  double tol = kDefaultTolerance;
};

struct UnlabeledResult {
  double distance = 0.0;
  /// Pairs 0..|L|-1 sit on the first tree's leaves, the rest on the second's.
  LabelPairing witness;
  /// True when the test at distance·(1 - 1e-6) was infeasible. When false the
  /// exact value lies in [lower_bound, distance].
  bool certified = true;
  double lower_bound = 0.0;
};

/// Exact interleaving distance of two (small) merge trees via an optimal
/// labeling. Leaves of each tree are labeled and every label is placed in the
/// other tree at its own height plus δ; the smallest δ from the candidate set
/// for which some placement has labeled distance ≤ δ is returned.
/// Throws BudgetExceeded when a feasibility test exceeds `options.budget`.
UnlabeledResult unlabeled_interleaving(const MergeTree& first, const MergeTree& second,
                                       const UnlabeledOptions& options = {});

/// {0} ∪ {|a - b|, |a - b| / 2} over all vertex heights a, b of both trees,
/// sorted ascending.
std::vector<double> interleaving_candidates(const MergeTree& first, const MergeTree& second);

/// A placement with labeled distance ≤ δ, if one exists.
std::optional<LabelPairing> placement_at(const MergeTree& first, const MergeTree& second,
                                         double delta, const UnlabeledOptions& options = {});

}  // namespace mt
