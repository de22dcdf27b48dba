#pragma once

#include <span>

#include "mergetree/matrix_bridge.hpp"

namespace mt {

/// L∞ distance between the induced matrices. Throws DomainError when the
/// label counts differ.
double labeled_interleaving(const LabeledMergeTree& a, const LabeledMergeTree& b);

/// Point at parameter lambda on the geodesic from a to b: the tree of the
/// linearly interpolated induced matrices.
LabeledMergeTree geodesic_point(const LabeledMergeTree& a, const LabeledMergeTree& b,
                                double lambda);

/// Length of the sampled geodesic over a uniform partition of [0, 1] into
/// `samples` segments. Throws std::logic_error if the sum departs from
/// labeled_interleaving(a, b) by more than `tol`.
double geodesic_length(const LabeledMergeTree& a, const LabeledMergeTree& b, std::size_t samples,
                       double tol = kDefaultTolerance);

struct OneCenter {
  LabeledMergeTree center;
  double radius;
};

/// Entrywise midrange of the induced matrices, turned back into a tree.
/// `radius` is the largest labeled interleaving distance to an input tree.
OneCenter one_center(std::span<const LabeledMergeTree> trees);

/// The entrywise midrange matrix used by one_center.
SymMatrix midrange_matrix(std::span<const SymMatrix> matrices);

}  // namespace mt
