#include "mergetree/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <tuple>

namespace mt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Maximum bipartite matching by augmenting paths (Kuhn).
class BipartiteMatcher {
 public:
  explicit BipartiteMatcher(std::vector<std::vector<std::size_t>> adjacency, std::size_t right)
      : adj_(std::move(adjacency)), match_right_(right, kFree) {}

  std::size_t solve() {
    std::size_t matched = 0;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      seen_.assign(match_right_.size(), false);
      if (augment(u)) ++matched;
    }
    return matched;
  }

 private:
  static constexpr std::size_t kFree = static_cast<std::size_t>(-1);

  bool augment(std::size_t u) {
    for (auto v : adj_[u]) {
      if (seen_[v]) continue;
      seen_[v] = true;
      if (match_right_[v] == kFree || augment(match_right_[v])) {
        match_right_[v] = u;
        return true;
      }
    }
    return false;
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> match_right_;
  std::vector<bool> seen_;
};

bool perfect_at(const std::vector<PersistencePoint>& a, const std::vector<PersistencePoint>& b,
                double cost) {
  const std::size_t p = a.size();
  const std::size_t q = b.size();
  // Left: a_0..a_{p-1}, then diagonal copies of b. Right: b_0..b_{q-1}, then
  // diagonal copies of a.
  std::vector<std::vector<std::size_t>> adj(p + q);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      if (point_distance(a[i], b[j]) <= cost) adj[i].push_back(j);
    }
    if (diagonal_distance(a[i]) <= cost) adj[i].push_back(q + i);
  }
  for (std::size_t j = 0; j < q; ++j) {
    if (diagonal_distance(b[j]) <= cost) adj[p + j].push_back(j);
    for (std::size_t i = 0; i < p; ++i) adj[p + j].push_back(q + i);
  }
  return BipartiteMatcher(std::move(adj), p + q).solve() == p + q;
}

}  // namespace

PersistenceDiagram persistence_diagram(const MergeTree& tree) {
  // Lowest leaf of each processed subtree, ordered so that the survivor of a
  // merge compares smallest: lower height first, then larger id.
  using Key = std::tuple<double, VertexId>;
  auto survivor_order = [](const Key& x, const Key& y) {
    if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) < std::get<0>(y);
    return std::get<1>(x) > std::get<1>(y);
  };

  std::vector<VertexId> order = tree.vertex_ids();
  std::sort(order.begin(), order.end(),
            [&](VertexId a, VertexId b) { return tree.height(a) < tree.height(b); });
  std::map<VertexId, Key> lowest;
  PersistenceDiagram out;
  for (auto v : order) {
    const auto kids = tree.children(v);
    if (kids.empty()) {
      lowest[v] = {tree.height(v), v};
      continue;
    }
    std::vector<Key> branches;
    for (auto c : kids) branches.push_back(lowest.at(c));
    std::sort(branches.begin(), branches.end(), survivor_order);
    for (std::size_t k = 1; k < branches.size(); ++k) {
      out.points.push_back({std::get<0>(branches[k]), tree.height(v)});
    }
    lowest[v] = branches.front();
  }
  out.points.push_back({std::get<0>(lowest.at(tree.top())), kInf});
  std::sort(out.points.begin(), out.points.end());
  return out;
}

double point_distance(const PersistencePoint& a, const PersistencePoint& b) {
  const double db = std::abs(a.birth - b.birth);
  const bool ia = std::isinf(a.death);
  const bool ib = std::isinf(b.death);
  if (ia != ib) return kInf;
  const double dd = ia ? 0.0 : std::abs(a.death - b.death);
  return std::max(db, dd);
}

double diagonal_distance(const PersistencePoint& p) { return (p.death - p.birth) / 2.0; }

double bottleneck_distance(const PersistenceDiagram& a, const PersistenceDiagram& b) {
  std::vector<double> essential_a;
  std::vector<double> essential_b;
  std::vector<PersistencePoint> finite_a;
  std::vector<PersistencePoint> finite_b;
  for (const auto& p : a.points) {
    if (std::isinf(p.death)) {
      essential_a.push_back(p.birth);
    } else {
      finite_a.push_back(p);
    }
  }
  for (const auto& p : b.points) {
    if (std::isinf(p.death)) {
      essential_b.push_back(p.birth);
    } else {
      finite_b.push_back(p);
    }
  }
  if (essential_a.size() != essential_b.size()) return kInf;

  std::sort(essential_a.begin(), essential_a.end());
  std::sort(essential_b.begin(), essential_b.end());
  double result = 0.0;
  for (std::size_t k = 0; k < essential_a.size(); ++k) {
    result = std::max(result, std::abs(essential_a[k] - essential_b[k]));
  }

  std::vector<double> costs{0.0};
  for (const auto& p : finite_a) {
    costs.push_back(diagonal_distance(p));
    for (const auto& q : finite_b) costs.push_back(point_distance(p, q));
  }
  for (const auto& q : finite_b) costs.push_back(diagonal_distance(q));
  std::sort(costs.begin(), costs.end());
  costs.erase(std::unique(costs.begin(), costs.end()), costs.end());

  // Smallest feasible cost; the largest candidate (all to the diagonal) is
  // always feasible.
  std::size_t lo = 0;
  std::size_t hi = costs.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (perfect_at(finite_a, finite_b, costs[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return std::max(result, costs[lo]);
}

double bottleneck_tree_distance(const MergeTree& a, const MergeTree& b) {
  return bottleneck_distance(persistence_diagram(a), persistence_diagram(b));
}

}  // namespace mt
