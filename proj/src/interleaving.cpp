#include "mergetree/interleaving.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace mt {

namespace {

void require_same_labels(const LabeledMergeTree& a, const LabeledMergeTree& b) {
  if (a.label_count() != b.label_count()) {
    throw DomainError("label count mismatch: " + std::to_string(a.label_count()) + " vs " +
                      std::to_string(b.label_count()));
  }
}

}  // namespace

double labeled_interleaving(const LabeledMergeTree& a, const LabeledMergeTree& b) {
  require_same_labels(a, b);
  return linf_distance(induced_matrix(a), induced_matrix(b));
}

LabeledMergeTree geodesic_point(const LabeledMergeTree& a, const LabeledMergeTree& b,
                                double lambda) {
  require_same_labels(a, b);
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw DomainError("lambda must lie in [0, 1]");
  }
  return tree_of_matrix(interpolate(induced_matrix(a), induced_matrix(b), lambda));
}

double geodesic_length(const LabeledMergeTree& a, const LabeledMergeTree& b, std::size_t samples,
                       double tol) {
  require_same_labels(a, b);
  if (samples == 0) throw DomainError("samples must be positive");
  const auto ma = induced_matrix(a);
  const auto mb = induced_matrix(b);
  auto at = [&](std::size_t k) {
    const double lambda = static_cast<double>(k) / static_cast<double>(samples);
    return induced_matrix(tree_of_matrix(interpolate(ma, mb, lambda)));
  };
  double length = 0.0;
  auto prev = at(0);
  for (std::size_t k = 1; k <= samples; ++k) {
    auto next = at(k);
    length += linf_distance(prev, next);
    prev = std::move(next);
  }
  const double direct = linf_distance(ma, mb);
  if (std::abs(length - direct) > tol) {
    throw std::logic_error("sampled geodesic length " + std::to_string(length) +
                           " differs from the distance " + std::to_string(direct));
  }
  return length;
}

SymMatrix midrange_matrix(std::span<const SymMatrix> matrices) {
  if (matrices.empty()) throw DomainError("one_center needs at least one tree");
  const std::size_t n = matrices.front().size();
  SymMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double lo = matrices.front()(i, j);
      double hi = lo;
      for (const auto& m : matrices) {
        if (m.size() != n) throw DomainError("label count mismatch in one_center input");
        lo = std::min(lo, m(i, j));
        hi = std::max(hi, m(i, j));
      }
      out.set(i, j, (hi + lo) / 2.0);
    }
  }
  return out;
}

OneCenter one_center(std::span<const LabeledMergeTree> trees) {
  if (trees.empty()) throw DomainError("one_center needs at least one tree");
  std::vector<SymMatrix> matrices;
  matrices.reserve(trees.size());
  for (const auto& t : trees) {
    if (t.label_count() != trees.front().label_count()) {
      throw DomainError("label count mismatch in one_center input");
    }
    matrices.push_back(induced_matrix(t));
  }
  auto center = tree_of_matrix(midrange_matrix(matrices));
  const auto cm = induced_matrix(center);
  double radius = 0.0;
  for (const auto& m : matrices) radius = std::max(radius, linf_distance(cm, m));
  return {std::move(center), radius};
}

}  // namespace mt
