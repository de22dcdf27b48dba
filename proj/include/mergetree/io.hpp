#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mergetree/good_map.hpp"
#include "mergetree/merge_tree.hpp"
#include "mergetree/persistence.hpp"
#include "mergetree/sym_matrix.hpp"

namespace mt::io {

/// Shortest decimal text that reads back to the same double; "inf"/"-inf"
/// for infinities.
std::string format_number(double x);

/// Contents of a tree file. `labels[k]` is the vertex carrying label k + 1;
/// empty when the file has no labels.
struct TreeFile {
  TreeDescription description;
  std::vector<VertexId> labels;
  /// Source line of each vertex / edge entry, for diagnostics.
  std::vector<std::size_t> vertex_lines;
  std::vector<std::size_t> edge_lines;

  MergeTree tree() const { return MergeTree(description); }
  /// Throws InvalidTree when some leaf is unlabeled or there are no labels.
  LabeledMergeTree labeled() const { return LabeledMergeTree(tree(), labels); }
};

/// Parses the tree JSON format:
///   { "vertices": [ {"id": int, "height": number, "labels": [int, ...]} ... ],
///     "edges": [ [childId, parentId], ... ] }
/// Throws ParseError ("line N: ...") on malformed JSON, on labels that do not
/// cover 1..n exactly once, and on merge tree invariant violations.
TreeFile parse_tree_json(std::string_view text);
/// Like parse_tree_json but leaves merge tree invariants unchecked.
TreeFile read_tree_file(std::string_view text);
/// Violation messages prefixed with the line of the offending entry.
std::vector<std::string> describe_violations(const TreeFile& file, const ValidationReport& report);
std::string tree_json(const MergeTree& tree);
std::string tree_json(const LabeledMergeTree& tree);

/// Matrix text: a line with n, then n lines of n numbers. Entries symmetric
/// within 1e-12 are averaged; larger asymmetry is a ParseError.
SymMatrix parse_matrix_text(std::string_view text);
std::string matrix_text(const SymMatrix& m);

/// One "birth death" pair per line; "inf" for infinite death.
PersistenceDiagram parse_diagram_text(std::string_view text);
std::string diagram_text(const PersistenceDiagram& d);

/// { "pairs": [ [ {"tree": 1, "edge": [u, v], "height": h}, {"tree": 2, ...} ], ... ] }
/// `edge` is [base, parent of base] with null for the root ray; a point at a
/// vertex has height equal to the base height.
std::string pairing_json(const MergeTree& first, const MergeTree& second,
                         const LabelPairing& pairing);
LabelPairing parse_pairing_json(std::string_view text);

/// { "delta": d, "source": <tree>, "target": <tree>,
///   "images": [ {"vertex": id, "edge": [u, v], "height": h}, ... ] }
VertexMap parse_map_json(std::string_view text);
std::string map_json(const VertexMap& map);

/// Graphviz rendering with vertices ranked by height and labels listed.
std::string tree_dot(const MergeTree& tree, const std::vector<VertexId>& labels = {},
                     std::string_view name = "merge_tree");

std::string read_file(const std::string& path);

}  // namespace mt::io
