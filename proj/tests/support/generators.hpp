#pragma once

#include <cstddef>
#include <random>

#include "mergetree/good_map.hpp"
#include "mergetree/merge_tree.hpp"
#include "mergetree/persistence.hpp"
#include "mergetree/sym_matrix.hpp"

namespace mt::testing {

using Rng = std::mt19937_64;

/// Heights are drawn from a coarse grid so ties occur often.
double grid_height(Rng& rng, int lo, int hi);

/// Random merge tree with `leaves` leaves built by agglomeration. Merges may
/// join up to three components, and roughly one edge in five is subdivided.
MergeTree random_tree(Rng& rng, std::size_t leaves, bool subdivide = true);

/// Random labeled tree: every leaf labeled, plus extra labels on internal
/// vertices, subdivision vertices and already-labeled vertices. Label order
/// is shuffled.
LabeledMergeTree random_labeled_tree(Rng& rng, std::size_t leaves);

/// Random labeled tree with exactly `labels` labels (labels >= leaves).
LabeledMergeTree random_labeled_tree_with(Rng& rng, std::size_t leaves, std::size_t labels);

/// Valid matrix: diagonal on a grid (or uniform reals when `continuous`),
/// off-diagonal at least the larger of the two diagonal entries.
SymMatrix random_valid_matrix(Rng& rng, std::size_t n, bool continuous = false);

/// Uniformly chosen point of the tree (vertex, edge interior or ray).
PointOnTree random_point(Rng& rng, const MergeTree& tree);

/// Pairing covering the leaves of both trees plus `extra` random pairs.
LabelPairing random_pairing(Rng& rng, const MergeTree& first, const MergeTree& second,
                            std::size_t extra);

/// Diagram with up to `max_points` finite points and `essential` points of
/// infinite death.
PersistenceDiagram random_diagram(Rng& rng, std::size_t max_points, std::size_t essential);

}  // namespace mt::testing
