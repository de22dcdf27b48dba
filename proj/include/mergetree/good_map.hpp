#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mergetree/merge_tree.hpp"

namespace mt {

/// Finite encoding of a continuous height-shifting map between merge trees:
/// the image of every source vertex. Images of edge interiors follow from
/// edge coherence (the image of a parent is the ancestor of the image of its
/// child at the shifted height).
struct VertexMap {
  MergeTree source;
  MergeTree target;
  double delta = 0.0;
  std::map<VertexId, PointOnTree> images;
};

enum class GoodMapProperty {
  kHeightShift = 1,     // f'(α(x)) - f(x) = δ
  kPreimageSpread = 2,  // preimages of a point merge within 2δ above it
  kUncoveredDepth = 3,  // points outside the image have depth at most 2δ
};

struct GoodMapVerdict {
  bool good = true;
  std::optional<GoodMapProperty> violated;
  std::string witness;
  explicit operator bool() const { return good; }
};

/// Checks the three δ-good conditions. Throws DomainError when the map is
/// malformed (missing images, points off the target, negative δ, or a
/// discontinuity along a source edge).
GoodMapVerdict verify_delta_good(const VertexMap& map, double tol = kDefaultTolerance);

/// Image of an arbitrary source point.
PointOnTree image_of(const VertexMap& map, const PointOnTree& x, double tol = kDefaultTolerance);

/// All source points mapped onto target point `w`.
std::vector<PointOnTree> preimage(const VertexMap& map, const PointOnTree& w,
                                  double tol = kDefaultTolerance);

/// Ordered (point in first tree, point in second tree) pairs; pair k carries
/// label k in both trees.
struct LabelPairing {
  std::vector<std::pair<PointOnTree, PointOnTree>> pairs;
};

/// Labeling induced by a δ-good map. Source leaves v contribute (v, α(v)) in
/// ascending id order; each target leaf w outside the image is paired with
/// the preimage (smallest base id) of its lowest ancestor in the image.
/// Throws DomainError if the map is not δ-good.
LabelPairing labeling_from_map(const VertexMap& map, double tol = kDefaultTolerance);

struct LabeledPair {
  LabeledMergeTree first;
  LabeledMergeTree second;
};

/// Refines both trees so every paired point is a vertex and attaches labels.
LabeledPair apply_pairing(const MergeTree& first, const MergeTree& second,
                          const LabelPairing& pairing);

/// Entry of the induced matrices whose difference exceeds the requested δ.
struct InfeasibleEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  double difference = 0.0;
};

/// Map α with α(x) the ancestor at height f(x) + δ of any label in the
/// subtree of x. Returns InfeasibleEntry when labeled_interleaving > δ.
std::variant<VertexMap, InfeasibleEntry> map_from_labeling(const LabeledMergeTree& source,
                                                           const LabeledMergeTree& target,
                                                           double delta,
                                                           double tol = kDefaultTolerance);

}  // namespace mt
