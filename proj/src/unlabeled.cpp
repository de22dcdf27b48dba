#include "mergetree/unlabeled.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace mt {

namespace {

class PlacementSearch {
 public:
  PlacementSearch(const MergeTree& first, const MergeTree& second, double delta,
                  const UnlabeledOptions& options)
      : first_(first), second_(second), delta_(delta), options_(options) {
    for (auto leaf : first.leaves()) {
      fixed_first_.push_back(true);
      pos1_.push_back(first.vertex_point(leaf));
      pos2_.emplace_back();
      options_of_.push_back(second.points_at_height(first.height(leaf) + delta, options.tol));
    }
    for (auto leaf : second.leaves()) {
      fixed_first_.push_back(false);
      pos1_.emplace_back();
      pos2_.push_back(second.vertex_point(leaf));
      options_of_.push_back(first.points_at_height(second.height(leaf) + delta, options.tol));
    }
    order_.resize(pos1_.size());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    // Fail-first: labels with the fewest placements are decided first.
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return options_of_[a].size() < options_of_[b].size();
    });
  }

  std::optional<LabelPairing> run() {
    if (!assign(0)) return std::nullopt;
    LabelPairing out;
    for (std::size_t k = 0; k < pos1_.size(); ++k) out.pairs.emplace_back(pos1_[k], pos2_[k]);
    return out;
  }

 private:
  bool consistent(std::size_t done) const {
    const std::size_t k = order_[done];
    const double limit = delta_ + options_.tol;
    if (std::abs(pos1_[k].height - pos2_[k].height) > limit) return false;
    for (std::size_t d = 0; d < done; ++d) {
      const std::size_t j = order_[d];
      const double a = first_.lca(pos1_[k], pos1_[j]).height;
      const double b = second_.lca(pos2_[k], pos2_[j]).height;
      if (std::abs(a - b) > limit) return false;
    }
    return true;
  }

  bool assign(std::size_t done) {
    if (done == order_.size()) return true;
    const std::size_t k = order_[done];
    for (const auto& p : options_of_[k]) {
      if (++visited_ > options_.budget) {
        throw BudgetExceeded("placement search exceeded its budget of " +
                             std::to_string(options_.budget) + " states");
      }
      (fixed_first_[k] ? pos2_[k] : pos1_[k]) = p;
      if (consistent(done) && assign(done + 1)) return true;
    }
    return false;
  }

  const MergeTree& first_;
  const MergeTree& second_;
  double delta_;
  const UnlabeledOptions& options_;
  std::vector<bool> fixed_first_;
  std::vector<PointOnTree> pos1_;
  std::vector<PointOnTree> pos2_;
  std::vector<std::vector<PointOnTree>> options_of_;
  std::vector<std::size_t> order_;
  std::uint64_t visited_ = 0;
};

}  // namespace

std::vector<double> interleaving_candidates(const MergeTree& first, const MergeTree& second) {
  std::vector<double> heights;
  for (auto v : first.vertex_ids()) heights.push_back(first.height(v));
  for (auto v : second.vertex_ids()) heights.push_back(second.height(v));
  std::vector<double> out{0.0};
  for (std::size_t a = 0; a < heights.size(); ++a) {
    for (std::size_t b = a + 1; b < heights.size(); ++b) {
      const double d = std::abs(heights[a] - heights[b]);
      out.push_back(d);
      out.push_back(d / 2.0);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<LabelPairing> placement_at(const MergeTree& first, const MergeTree& second,
                                         double delta, const UnlabeledOptions& options) {
  return PlacementSearch(first, second, delta, options).run();
}

UnlabeledResult unlabeled_interleaving(const MergeTree& first, const MergeTree& second,
                                       const UnlabeledOptions& options) {
  const auto candidates = interleaving_candidates(first, second);
  double previous = 0.0;
  for (double delta : candidates) {
    auto witness = placement_at(first, second, delta, options);
    if (!witness) {
      previous = delta;
      continue;
    }
    UnlabeledResult result{delta, std::move(*witness), true, delta};
    if (delta > 0.0) {
      const double probe = delta - 1e-6 * delta;
      if (placement_at(first, second, probe, options)) {
        result.certified = false;
        result.lower_bound = previous;
      }
    }
    return result;
  }
  // The largest candidate bounds the distance, so the loop always returns.
  throw std::logic_error("no feasible interleaving candidate");
}

}  // namespace mt
