#pragma once

#include <vector>

#include "mergetree/merge_tree.hpp"

namespace mt {

struct PersistencePoint {
  double birth = 0.0;
  double death = 0.0;  // +infinity for essential classes

  friend bool operator==(const PersistencePoint&, const PersistencePoint&) = default;
  friend auto operator<=>(const PersistencePoint&, const PersistencePoint&) = default;
};

struct PersistenceDiagram {
  std::vector<PersistencePoint> points;
};

/// 0-dimensional sublevel-set diagram of a merge tree by the elder rule: at
/// each merge every branch except the one holding the lowest minimum dies.
/// Among equal minima the branch whose minimum leaf has the smaller id dies.
/// Points are returned sorted.
PersistenceDiagram persistence_diagram(const MergeTree& tree);

/// L∞ distance between two diagram points (infinite deaths compare equal).
double point_distance(const PersistencePoint& a, const PersistencePoint& b);

/// L∞ distance of a point to the diagonal.
double diagonal_distance(const PersistencePoint& p);

/// Bottleneck distance. Essential points are matched among themselves by
/// sorted births; if their counts differ the distance is +infinity. The finite
/// parts are matched by bisection over candidate costs with a maximum
/// bipartite matching at each threshold.
double bottleneck_distance(const PersistenceDiagram& a, const PersistenceDiagram& b);

double bottleneck_tree_distance(const MergeTree& a, const MergeTree& b);

}  // namespace mt
