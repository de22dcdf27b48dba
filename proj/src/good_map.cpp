#include "mergetree/good_map.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mergetree/matrix_bridge.hpp"

namespace mt {

namespace {

std::string describe(const PointOnTree& p) {
  return "point above vertex " + std::to_string(p.base) + " at height " + std::to_string(p.height);
}

double upper_end(const MergeTree& t, VertexId v) {
  auto p = t.parent(v);
  return p ? t.height(*p) : std::numeric_limits<double>::infinity();
}

// Normalized images; throws on malformed input.
std::map<VertexId, PointOnTree> checked_images(const VertexMap& map, double tol) {
  if (!(map.delta >= 0.0) || !std::isfinite(map.delta)) {
    throw DomainError("malformed map: delta must be a nonnegative finite number");
  }
  std::map<VertexId, PointOnTree> images;
  for (auto v : map.source.vertex_ids()) {
    auto it = map.images.find(v);
    if (it == map.images.end()) {
      throw DomainError("malformed map: no image for source vertex " + std::to_string(v));
    }
    if (!map.target.contains(it->second.base)) {
      throw DomainError("malformed map: image of vertex " + std::to_string(v) +
                        " references unknown target vertex " + std::to_string(it->second.base));
    }
    if (it->second.height < map.target.height(it->second.base) - tol) {
      throw DomainError("malformed map: image of vertex " + std::to_string(v) +
                        " lies below its base vertex");
    }
    images[v] = map.target.point(it->second.base, it->second.height, tol);
  }
  for (const auto& [v, p] : map.images) {
    if (!map.source.contains(v)) {
      throw DomainError("malformed map: image given for unknown source vertex " +
                        std::to_string(v));
    }
  }
  return images;
}

GoodMapVerdict violation(GoodMapProperty property, std::string witness) {
  return {false, property, std::move(witness)};
}

}  // namespace

GoodMapVerdict verify_delta_good(const VertexMap& map, double tol) {
  const auto& src = map.source;
  const auto& tgt = map.target;
  const double delta = map.delta;
  const auto images = checked_images(map, tol);

  // (i) height shift on vertices; coherence then extends it to edges.
  for (auto v : src.vertex_ids()) {
    const double shift = images.at(v).height - src.height(v);
    if (std::abs(shift - delta) > tol) {
      return violation(GoodMapProperty::kHeightShift,
                       "vertex " + std::to_string(v) + " is shifted by " + std::to_string(shift));
    }
  }
  for (auto v : src.vertex_ids()) {
    if (auto p = src.parent(v)) {
      const auto& up = images.at(*p);
      if (!tgt.same_point(tgt.ancestor_at(images.at(v), up.height, tol), up, tol)) {
        throw DomainError("malformed map: discontinuous along source edge (" + std::to_string(v) +
                          ", " + std::to_string(*p) + ")");
      }
    }
  }

  // (ii) Two source points at level t share an image iff the target lca of
  // their edges' lower images lies at or below t + δ. The lca in the source
  // is highest relative to t at the smallest such t.
  const auto& ids = src.vertex_ids();
  for (std::size_t a = 0; a < ids.size(); ++a) {
    for (std::size_t b = a + 1; b < ids.size(); ++b) {
      const VertexId v1 = ids[a];
      const VertexId v2 = ids[b];
      const double lo = std::max(src.height(v1), src.height(v2));
      const double hi = std::min(upper_end(src, v1), upper_end(src, v2));
      if (lo > hi + tol) continue;
      const double joined = tgt.lca(images.at(v1), images.at(v2)).height - delta;
      const double t = std::max(lo, joined);
      if (t > hi + tol) continue;
      const auto x = src.lca(src.point(v1, t, tol), src.point(v2, t, tol));
      const double spread = x.height - t;
      if (spread > 2.0 * delta + tol) {
        return violation(GoodMapProperty::kPreimageSpread,
                         "preimage of " + describe(tgt.ancestor_at(images.at(v1), t + delta, tol)) +
                             " spreads " + std::to_string(spread) + " below its lca");
      }
    }
  }

  // (iii) The image is the union of upward paths from images of source
  // leaves; the lowest image point above c is the lowest such lca.
  const auto src_leaves = src.leaves();
  for (auto c : tgt.vertex_ids()) {
    double lowest = std::numeric_limits<double>::infinity();
    for (auto l : src_leaves) {
      lowest = std::min(lowest, tgt.lca(images.at(l), tgt.vertex_point(c)).height);
    }
    if (lowest <= tgt.height(c) + tol) continue;
    const double depth = lowest - tgt.subtree_min(c);
    if (depth > 2.0 * delta + tol) {
      return violation(GoodMapProperty::kUncoveredDepth,
                       "target vertex " + std::to_string(c) + " lies outside the image with depth up to " +
                           std::to_string(depth));
    }
  }
  return {};
}

PointOnTree image_of(const VertexMap& map, const PointOnTree& x, double tol) {
  const auto& img = map.images.at(x.base);
  return map.target.ancestor_at(img, x.height + map.delta, tol);
}

std::vector<PointOnTree> preimage(const VertexMap& map, const PointOnTree& w, double tol) {
  std::vector<PointOnTree> out;
  for (const auto& x : map.source.points_at_height(w.height - map.delta, tol)) {
    if (map.target.same_point(image_of(map, x, tol), w, tol)) out.push_back(x);
  }
  return out;
}

LabelPairing labeling_from_map(const VertexMap& map, double tol) {
  if (auto verdict = verify_delta_good(map, tol); !verdict) {
    throw DomainError("map is not delta-good: " + verdict.witness);
  }
  const auto& src = map.source;
  const auto& tgt = map.target;
  LabelPairing out;
  auto add = [&](const PointOnTree& u, const PointOnTree& w) {
    for (const auto& [pu, pw] : out.pairs) {
      if (src.same_point(pu, u, tol) && tgt.same_point(pw, w, tol)) return;
    }
    out.pairs.emplace_back(u, w);
  };

  // Source leaves, paired with their images.
  const auto src_leaves = src.leaves();
  for (auto v : src_leaves) {
    const auto w = map.target.point(map.images.at(v).base, map.images.at(v).height, tol);
    for (const auto& u : preimage(map, w, tol)) {
      if (src.is_vertex(u) && src.is_leaf(u.base)) add(u, w);
    }
  }

  // Target leaves outside the image, paired with a preimage of their lowest
  // image ancestor.
  for (auto leaf : tgt.leaves()) {
    const auto w = tgt.vertex_point(leaf);
    std::optional<PointOnTree> lowest;
    for (auto l : src_leaves) {
      const auto x = tgt.lca(map.images.at(l), w);
      if (!lowest || x.height < lowest->height) lowest = x;
    }
    if (tgt.same_point(*lowest, w, tol)) continue;
    auto pre = preimage(map, *lowest, tol);
    if (pre.empty()) throw std::logic_error("image point without preimage");
    const auto u = *std::min_element(pre.begin(), pre.end(), [](const auto& a, const auto& b) {
      return a.base < b.base;
    });
    add(u, w);
  }
  return out;
}

LabeledPair apply_pairing(const MergeTree& first, const MergeTree& second,
                          const LabelPairing& pairing) {
  std::vector<PointOnTree> a;
  std::vector<PointOnTree> b;
  for (const auto& [p, q] : pairing.pairs) {
    a.push_back(p);
    b.push_back(q);
  }
  std::vector<VertexId> la;
  std::vector<VertexId> lb;
  auto ra = first.refined(a, la);
  auto rb = second.refined(b, lb);
  return {LabeledMergeTree(std::move(ra), std::move(la)),
          LabeledMergeTree(std::move(rb), std::move(lb))};
}

std::variant<VertexMap, InfeasibleEntry> map_from_labeling(const LabeledMergeTree& source,
                                                           const LabeledMergeTree& target,
                                                           double delta, double tol) {
  if (source.label_count() != target.label_count()) {
    throw DomainError("label count mismatch");
  }
  if (!(delta >= 0.0) || !std::isfinite(delta)) throw DomainError("delta must be nonnegative");
  const auto m = induced_matrix(source);
  const auto mp = induced_matrix(target);
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double diff = std::abs(m(i, j) - mp(i, j));
      if (diff > delta + tol) return InfeasibleEntry{i, j, diff};
    }
  }

  const auto& src = source.tree();
  const auto& tgt = target.tree();
  VertexMap map{src, tgt, delta, {}};
  for (auto x : src.vertex_ids()) {
    const double h = src.height(x) + delta;
    std::optional<PointOnTree> image;
    for (std::size_t i = 0; i < n; ++i) {
      if (src.lca(source.label_vertex(i), x) != x) continue;
      const auto y = tgt.ancestor_at(tgt.vertex_point(target.label_vertex(i)), h, tol);
      if (!image) {
        image = y;
      } else if (!tgt.same_point(*image, y, tol)) {
        throw std::logic_error("map_from_labeling: labels below vertex " + std::to_string(x) +
                               " disagree on their image");
      }
    }
    // Every subtree contains a leaf, and every leaf is labeled.
    map.images[x] = *image;
  }
  return map;
}

}  // namespace mt
