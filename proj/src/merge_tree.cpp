#include "mergetree/merge_tree.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <unordered_map>

namespace mt {

namespace {

std::string id_str(VertexId v) { return std::to_string(v); }

std::string edge_str(const std::pair<VertexId, VertexId>& e) {
  return "(" + id_str(e.first) + ", " + id_str(e.second) + ")";
}

// Exact, order-preserving text for a double (hex float).
std::string exact(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::hex);
  return std::string(buf, res.ptr);
}

}  // namespace

ValidationReport validate_tree(const TreeDescription& d) {
  ValidationReport report;
  auto add = [&](ViolationKind kind, std::string msg, std::optional<VertexId> v,
                 std::optional<std::size_t> e) {
    report.violations.push_back({kind, std::move(msg), v, e});
  };

  if (d.vertices.empty()) {
    add(ViolationKind::kEmpty, "tree has no vertices", std::nullopt, std::nullopt);
    return report;
  }

  std::unordered_map<VertexId, double> height;
  for (const auto& v : d.vertices) {
    if (v.id < 0) {
      add(ViolationKind::kNegativeId, "negative vertex id " + id_str(v.id), v.id, std::nullopt);
    }
    if (!std::isfinite(v.height)) {
      add(ViolationKind::kNonFiniteHeight, "non-finite height at vertex " + id_str(v.id), v.id,
          std::nullopt);
    }
    if (!height.emplace(v.id, v.height).second) {
      add(ViolationKind::kDuplicateVertex, "duplicate vertex id " + id_str(v.id), v.id,
          std::nullopt);
    }
  }

  std::unordered_map<VertexId, VertexId> parent;
  for (std::size_t k = 0; k < d.edges.size(); ++k) {
    const auto& e = d.edges[k];
    auto child = height.find(e.first);
    auto par = height.find(e.second);
    if (child == height.end() || par == height.end()) {
      const VertexId missing = child == height.end() ? e.first : e.second;
      add(ViolationKind::kUnknownVertex,
          "edge " + edge_str(e) + " references unknown vertex " + id_str(missing), missing, k);
      continue;
    }
    if (child->second == par->second) {
      add(ViolationKind::kEqualHeights, "equal function value on edge " + edge_str(e), e.first, k);
    } else if (child->second > par->second) {
      add(ViolationKind::kParentNotHigher,
          "parent not higher than child on edge " + edge_str(e), e.first, k);
    }
    if (!parent.emplace(e.first, e.second).second) {
      add(ViolationKind::kMultipleAncestors,
          "multiple ancestors: vertex " + id_str(e.first) + " has more than one parent", e.first,
          k);
    }
  }

  // Walk to the top from every vertex; with at most one parent per vertex this
  // detects cycles and forests.
  std::unordered_map<VertexId, VertexId> top_of;
  std::vector<VertexId> tops;
  for (const auto& [id, h] : height) {
    if (!parent.contains(id)) tops.push_back(id);
  }
  std::sort(tops.begin(), tops.end());
  for (const auto& v : d.vertices) {
    if (top_of.contains(v.id)) continue;
    std::vector<VertexId> chain;
    std::unordered_map<VertexId, bool> on_chain;
    VertexId cur = v.id;
    bool cyclic = false;
    while (true) {
      if (auto it = top_of.find(cur); it != top_of.end()) {
        for (auto c : chain) top_of[c] = it->second;
        break;
      }
      if (on_chain[cur]) {
        cyclic = true;
        break;
      }
      on_chain[cur] = true;
      chain.push_back(cur);
      auto p = parent.find(cur);
      if (p == parent.end() || !height.contains(p->second)) {
        for (auto c : chain) top_of[c] = cur;
        break;
      }
      cur = p->second;
    }
    if (cyclic) {
      add(ViolationKind::kCycle, "cycle through vertex " + id_str(cur), cur, std::nullopt);
      for (auto c : chain) top_of[c] = -1;
    }
  }
  if (tops.size() > 1) {
    add(ViolationKind::kDisconnected,
        "tree is disconnected: " + std::to_string(tops.size()) + " vertices have no parent",
        tops[1], std::nullopt);
  } else if (tops.empty() && report.ok()) {
    add(ViolationKind::kCycle, "no top vertex", std::nullopt, std::nullopt);
  }
  return report;
}

MergeTree::MergeTree(const TreeDescription& d) {
  auto report = validate_tree(d);
  if (!report.ok()) throw InvalidTree(report.violations.front().message);

  std::vector<VertexSpec> verts = d.vertices;
  std::sort(verts.begin(), verts.end(),
            [](const VertexSpec& a, const VertexSpec& b) { return a.id < b.id; });
  const std::size_t n = verts.size();
  ids_.reserve(n);
  heights_.reserve(n);
  for (const auto& v : verts) {
    ids_.push_back(v.id);
    heights_.push_back(v.height);
  }
  parent_.assign(n, kNone);
  children_.assign(n, {});
  for (const auto& [c, p] : d.edges) {
    const auto ci = index(c);
    const auto pi = index(p);
    parent_[ci] = pi;
    children_[pi].push_back(ci);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (parent_[i] == kNone) top_ = i;
  }

  // Heights strictly increase towards the top, so ascending height order
  // visits children before parents.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return heights_[a] < heights_[b]; });
  subtree_min_ = heights_;
  for (auto i : order) {
    if (parent_[i] != kNone) {
      subtree_min_[parent_[i]] = std::min(subtree_min_[parent_[i]], subtree_min_[i]);
    }
  }
  level_.assign(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (parent_[*it] != kNone) level_[*it] = level_[parent_[*it]] + 1;
  }
}

std::size_t MergeTree::index(VertexId v) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) throw DomainError("unknown vertex " + id_str(v));
  return static_cast<std::size_t>(it - ids_.begin());
}

bool MergeTree::contains(VertexId v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

std::optional<VertexId> MergeTree::parent(VertexId v) const {
  const auto p = parent_[index(v)];
  if (p == kNone) return std::nullopt;
  return ids_[p];
}

std::vector<VertexId> MergeTree::children(VertexId v) const {
  std::vector<VertexId> out;
  for (auto c : children_[index(v)]) out.push_back(ids_[c]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> MergeTree::leaves() const {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (children_[i].empty()) out.push_back(ids_[i]);
  }
  return out;
}

double MergeTree::depth(VertexId v) const {
  const auto i = index(v);
  return heights_[i] - subtree_min_[i];
}

VertexId MergeTree::lca(VertexId a, VertexId b) const {
  auto i = index(a);
  auto j = index(b);
  while (level_[i] > level_[j]) i = parent_[i];
  while (level_[j] > level_[i]) j = parent_[j];
  while (i != j) {
    i = parent_[i];
    j = parent_[j];
  }
  return ids_[i];
}

PointOnTree MergeTree::lca(const PointOnTree& a, const PointOnTree& b) const {
  const VertexId c = lca(a.base, b.base);
  if (c == a.base && c == b.base) return {c, std::max(a.height, b.height)};
  // b lies strictly below vertex c = a.base, which a sits at or above.
  if (c == a.base) return a;
  if (c == b.base) return b;
  return vertex_point(c);
}

bool MergeTree::precedes(const PointOnTree& lower, const PointOnTree& upper) const {
  return lca(lower, upper) == upper;
}

PointOnTree MergeTree::vertex_point(VertexId v) const { return {v, height(v)}; }

PointOnTree MergeTree::point(VertexId base, double h, double tol) const {
  return ancestor_at(vertex_point(base), h, tol);
}

PointOnTree MergeTree::ancestor_at(const PointOnTree& p, double h, double tol) const {
  if (!std::isfinite(h)) throw DomainError("point height must be finite");
  if (h < p.height - tol) {
    throw DomainError("requested ancestor height lies below the point");
  }
  auto i = index(p.base);
  while (parent_[i] != kNone && heights_[parent_[i]] <= h + tol) i = parent_[i];
  if (std::abs(h - heights_[i]) <= tol || h < heights_[i]) return {ids_[i], heights_[i]};
  return {ids_[i], h};
}

std::vector<PointOnTree> MergeTree::points_at_height(double h, double tol) const {
  std::vector<PointOnTree> out;
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (std::abs(heights_[i] - h) <= tol) {
      out.push_back({ids_[i], heights_[i]});
    } else if (heights_[i] < h && (parent_[i] == kNone || heights_[parent_[i]] > h + tol)) {
      out.push_back({ids_[i], h});
    }
  }
  return out;
}

bool MergeTree::same_point(const PointOnTree& a, const PointOnTree& b, double tol) const {
  if (a.base == b.base) return std::abs(a.height - b.height) <= tol;
  // Normalization may place near-equal points on either side of a vertex.
  const auto pa = point(a.base, a.height, tol);
  const auto pb = point(b.base, b.height, tol);
  return pa.base == pb.base && std::abs(pa.height - pb.height) <= tol;
}

double MergeTree::path_metric(const PointOnTree& a, const PointOnTree& b) const {
  if (!std::isfinite(a.height) || !std::isfinite(b.height)) {
    throw DomainError("path metric undefined at the root (infinite height)");
  }
  const auto c = lca(a, b);
  return (c.height - a.height) + (c.height - b.height);
}

MergeTree MergeTree::refined(std::span<const PointOnTree> points,
                             std::vector<VertexId>& vertex_of) const {
  auto d = description();
  std::map<VertexId, std::vector<double>> cuts;
  std::vector<PointOnTree> normalized;
  normalized.reserve(points.size());
  for (const auto& p : points) {
    auto q = point(p.base, p.height);
    normalized.push_back(q);
    if (!is_vertex(q)) cuts[q.base].push_back(q.height);
  }
  VertexId next = max_id() + 1;
  std::map<std::pair<VertexId, double>, VertexId> inserted;
  for (auto& [base, hs] : cuts) {
    std::sort(hs.begin(), hs.end());
    hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
    const auto above = parent(base);
    // Drop the original edge out of `base` and route it through the new chain.
    if (above) {
      std::erase_if(d.edges, [&](const auto& e) { return e.first == base; });
    }
    VertexId below = base;
    for (double h : hs) {
      const VertexId v = next++;
      d.vertices.push_back({v, h});
      d.edges.emplace_back(below, v);
      inserted[{base, h}] = v;
      below = v;
    }
    if (above) d.edges.emplace_back(below, *above);
  }
  vertex_of.clear();
  for (const auto& q : normalized) {
    vertex_of.push_back(is_vertex(q) ? q.base : inserted.at({q.base, q.height}));
  }
  return MergeTree(d);
}

TreeDescription MergeTree::description() const {
  TreeDescription d;
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    d.vertices.push_back({ids_[i], heights_[i]});
    if (parent_[i] != kNone) d.edges.emplace_back(ids_[i], ids_[parent_[i]]);
  }
  return d;
}

LabeledMergeTree::LabeledMergeTree(MergeTree tree, std::vector<VertexId> label_vertices)
    : tree_(std::move(tree)), labels_(std::move(label_vertices)) {
  if (labels_.empty()) throw InvalidTree("labeled merge tree needs at least one label");
  for (auto v : labels_) {
    if (!tree_.contains(v)) throw InvalidTree("label on unknown vertex " + id_str(v));
  }
  for (auto leaf : tree_.leaves()) {
    if (!is_labeled(leaf)) throw InvalidTree("leaf " + id_str(leaf) + " carries no label");
  }
}

std::vector<std::size_t> LabeledMergeTree::labels_at(VertexId v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == v) out.push_back(i);
  }
  return out;
}

bool LabeledMergeTree::is_labeled(VertexId v) const {
  return std::find(labels_.begin(), labels_.end(), v) != labels_.end();
}

namespace {

TreeDescription contract(const MergeTree& t, const std::function<bool(VertexId)>& keep_always) {
  auto keep = [&](VertexId v) { return keep_always(v) || t.child_count(v) != 1; };
  TreeDescription d;
  for (auto v : t.vertex_ids()) {
    if (!keep(v)) continue;
    d.vertices.push_back({v, t.height(v)});
    auto p = t.parent(v);
    while (p && !keep(*p)) p = t.parent(*p);
    if (p) d.edges.emplace_back(v, *p);
  }
  return d;
}

struct Encoder {
  const MergeTree& tree;
  const LabeledMergeTree* labeled;

  std::string operator()(VertexId v) const {
    std::vector<std::string> parts;
    for (auto c : tree.children(v)) parts.push_back((*this)(c));
    std::sort(parts.begin(), parts.end());
    std::string s = "(" + exact(tree.height(v)) + "[";
    if (labeled) {
      for (auto l : labeled->labels_at(v)) s += std::to_string(l) + ",";
    }
    s += "]";
    for (const auto& p : parts) s += p;
    return s + ")";
  }
};

}  // namespace

MergeTree canonicalize(const MergeTree& tree) {
  return MergeTree(contract(tree, [](VertexId) { return false; }));
}

LabeledMergeTree canonicalize(const LabeledMergeTree& tree) {
  auto d = contract(tree.tree(), [&](VertexId v) { return tree.is_labeled(v); });
  return LabeledMergeTree(MergeTree(d),
                          std::vector<VertexId>(tree.label_vertices().begin(),
                                                tree.label_vertices().end()));
}

bool structurally_equal(const MergeTree& a, const MergeTree& b) {
  const auto ca = canonicalize(a);
  const auto cb = canonicalize(b);
  return Encoder{ca, nullptr}(ca.top()) == Encoder{cb, nullptr}(cb.top());
}

bool structurally_equal(const LabeledMergeTree& a, const LabeledMergeTree& b) {
  if (a.label_count() != b.label_count()) return false;
  const auto ca = canonicalize(a);
  const auto cb = canonicalize(b);
  return Encoder{ca.tree(), &ca}(ca.tree().top()) == Encoder{cb.tree(), &cb}(cb.tree().top());
}

}  // namespace mt
