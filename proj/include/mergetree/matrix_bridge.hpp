#pragma once

#include "mergetree/merge_tree.hpp"
#include "mergetree/sym_matrix.hpp"

namespace mt {

/// Entry (i, j) is the height of lca(label i, label j). Always an ultra matrix.
SymMatrix induced_matrix(const LabeledMergeTree& tree);

/// Merge tree of the sublevel-set filtration of the complete graph whose
/// vertex i has value M_ii and edge ij has value M_ij. Edges are swept in
/// nondecreasing value (ties in lexicographic (i, j) order) with a union-find;
/// merges at the height of an existing component top are absorbed into it.
/// The result is canonical; label i sits at the vertex born at M_ii, and
/// vertex ids are 0..k-1. Throws InvalidMatrix if m is not valid.
LabeledMergeTree tree_of_matrix(const SymMatrix& m);

/// induced_matrix(tree_of_matrix(m)), computed directly by the Kruskal sweep:
/// entry (i, j) becomes the height at which i and j first share a component.
SymMatrix ultrafy(const SymMatrix& m);

}  // namespace mt
