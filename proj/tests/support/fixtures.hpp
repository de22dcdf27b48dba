#pragma once

#include <vector>

#include "mergetree/good_map.hpp"
#include "mergetree/merge_tree.hpp"
#include "mergetree/sym_matrix.hpp"

namespace mt::testing {

/// Tree from (id, height) vertices and (child, parent) edges.
MergeTree make_tree(std::vector<VertexSpec> vertices,
                    std::vector<std::pair<VertexId, VertexId>> edges);

/// Labeled tree; `labels[k]` carries label k.
LabeledMergeTree make_labeled(std::vector<VertexSpec> vertices,
                              std::vector<std::pair<VertexId, VertexId>> edges,
                              std::vector<VertexId> labels);

/// Two leaves at 0 merging at `h`, labels 1 and 2 on the leaves.
LabeledMergeTree cherry(double h);

// Degenerate labels: labels 1 and 2 share a leaf
// at 1, label 4 is a leaf at 2 below the internal label 3 at 3, root merge 4.
LabeledMergeTree degenerate_labels_tree();
SymMatrix degenerate_labels_matrix();

// A 1-good map and the labeling it induces.
MergeTree map_example_source();
MergeTree map_example_target();
VertexMap map_example();
/// Printed matrix of the source labeling. With `alternative` label 7 sits on
/// the vertex of label 3 instead of the edge above label 4.
SymMatrix map_example_source_matrix(bool alternative);
SymMatrix map_example_target_matrix();

// Averaging example: two three-label trees whose mean matrix is not ultra.
LabeledMergeTree averaging_first();
LabeledMergeTree averaging_second();

}  // namespace mt::testing
