#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mergetree/errors.hpp"

namespace mt {

/// Opaque nonnegative vertex identifier. Ids need not be contiguous and are
/// preserved by canonicalization.
using VertexId = std::int64_t;

struct VertexSpec {
  VertexId id = 0;
  double height = 0.0;
};

/// Unvalidated tree as read from a file: vertices plus (child, parent) edges.
struct TreeDescription {
  std::vector<VertexSpec> vertices;
  std::vector<std::pair<VertexId, VertexId>> edges;
};

enum class ViolationKind {
  kEmpty,
  kNegativeId,
  kDuplicateVertex,
  kNonFiniteHeight,
  kUnknownVertex,
  kEqualHeights,
  kParentNotHigher,
  kMultipleAncestors,
  kCycle,
  kDisconnected,
};

struct Violation {
  ViolationKind kind;
  std::string message;
  std::optional<VertexId> vertex;
  std::optional<std::size_t> edge_index;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks every merge tree invariant. Violations are returned as data.
ValidationReport validate_tree(const TreeDescription& description);

/// A point of the underlying metric tree. `base` is the highest vertex at or
/// below the point on its root path, so the point is either the vertex itself
/// (height == height(base)) or lies strictly inside the edge from `base` to its
/// parent. Points above the top vertex lie on the implicit root ray.
struct PointOnTree {
  VertexId base = 0;
  double height = 0.0;

  friend bool operator==(const PointOnTree&, const PointOnTree&) = default;
};

class MergeTree {
 public:
  /// Throws InvalidTree listing the first violation if the description is not
  /// a merge tree.
  explicit MergeTree(const TreeDescription& description);

  std::size_t size() const { return ids_.size(); }
  /// Vertex ids in ascending order.
  const std::vector<VertexId>& vertex_ids() const { return ids_; }
  bool contains(VertexId v) const;
  double height(VertexId v) const { return heights_[index(v)]; }
  std::optional<VertexId> parent(VertexId v) const;
  std::vector<VertexId> children(VertexId v) const;
  std::size_t child_count(VertexId v) const { return children_[index(v)].size(); }
  bool is_leaf(VertexId v) const { return children_[index(v)].empty(); }
  VertexId top() const { return ids_[top_]; }
  std::vector<VertexId> leaves() const;
  VertexId max_id() const { return ids_.back(); }

  /// height(v) minus the minimum height in the subtree rooted at v.
  double depth(VertexId v) const;
  double subtree_min(VertexId v) const { return subtree_min_[index(v)]; }
  double min_height() const { return subtree_min_[top_]; }

  VertexId lca(VertexId a, VertexId b) const;
  PointOnTree lca(const PointOnTree& a, const PointOnTree& b) const;
  /// True when `lower` ⪯ `upper` in the ancestor order.
  bool precedes(const PointOnTree& lower, const PointOnTree& upper) const;

  PointOnTree vertex_point(VertexId v) const;
  /// Normalized point above (or at) `base` at the given height. Heights within
  /// `tol` of a vertex snap onto that vertex.
  PointOnTree point(VertexId base, double height, double tol = kDefaultTolerance) const;
  /// The unique ancestor of `p` at height `h` (h >= p.height).
  PointOnTree ancestor_at(const PointOnTree& p, double h, double tol = kDefaultTolerance) const;
  /// One point per edge (or ray) crossing height `h`, plus vertices at `h`.
  std::vector<PointOnTree> points_at_height(double h, double tol = kDefaultTolerance) const;
  bool is_vertex(const PointOnTree& p) const { return p.height == height(p.base); }
  bool same_point(const PointOnTree& a, const PointOnTree& b, double tol = kDefaultTolerance) const;

  /// Sum of height spans along the path between two points.
  double path_metric(const PointOnTree& a, const PointOnTree& b) const;

  /// Subdivides edges so that every given point becomes a vertex. New vertices
  /// get fresh ids above max_id(); `vertex_of` receives the vertex for each point.
  MergeTree refined(std::span<const PointOnTree> points, std::vector<VertexId>& vertex_of) const;

  TreeDescription description() const;

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::size_t index(VertexId v) const;

  std::vector<VertexId> ids_;
  std::vector<double> heights_;
  std::vector<std::size_t> parent_;
  std::vector<std::vector<std::size_t>> children_;
  std::vector<std::size_t> level_;
  std::vector<double> subtree_min_;
  std::size_t top_ = 0;
};

/// A merge tree with labels 0..n-1 (written 1..n in files). Every leaf carries
/// at least one label; labels may sit on internal vertices and share vertices.
class LabeledMergeTree {
 public:
  LabeledMergeTree(MergeTree tree, std::vector<VertexId> label_vertices);

  const MergeTree& tree() const { return tree_; }
  std::size_t label_count() const { return labels_.size(); }
  VertexId label_vertex(std::size_t label) const { return labels_.at(label); }
  std::span<const VertexId> label_vertices() const { return labels_; }
  std::vector<std::size_t> labels_at(VertexId v) const;
  bool is_labeled(VertexId v) const;

 private:
  MergeTree tree_;
  std::vector<VertexId> labels_;
};

/// Removes unlabeled vertices with exactly one child (subdivision vertices,
/// including a unary top vertex, which subdivides the root ray).
MergeTree canonicalize(const MergeTree& tree);
LabeledMergeTree canonicalize(const LabeledMergeTree& tree);

/// Equality up to subdivision and vertex ids, with exact height comparison.
bool structurally_equal(const MergeTree& a, const MergeTree& b);
bool structurally_equal(const LabeledMergeTree& a, const LabeledMergeTree& b);

}  // namespace mt
