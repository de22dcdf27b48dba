#include "mergetree/matrix_bridge.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

namespace mt {

namespace {

struct Edge {
  double value;
  std::size_t i;
  std::size_t j;
};

std::vector<Edge> sorted_edges(const SymMatrix& m) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) edges.push_back({m(i, j), i, j});
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.value, a.i, a.j) < std::tie(b.value, b.i, b.j);
  });
  return edges;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // Returns the surviving root.
  std::size_t unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    parent_[b] = a;
    return a;
  }

 private:
  std::vector<std::size_t> parent_;
};

void require_valid(const SymMatrix& m) {
  if (auto v = is_valid(m); !v) {
    const auto [i, j] = *v.counterexample;
    throw InvalidMatrix("matrix is not valid: diagonal entry (" + std::to_string(i + 1) + ", " +
                        std::to_string(i + 1) + ") exceeds entry (" + std::to_string(i + 1) +
                        ", " + std::to_string(j + 1) + ")");
  }
}

}  // namespace

SymMatrix induced_matrix(const LabeledMergeTree& tree) {
  const auto& t = tree.tree();
  const std::size_t n = tree.label_count();
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      m.set(i, j, t.height(t.lca(tree.label_vertex(i), tree.label_vertex(j))));
    }
  }
  return m;
}

LabeledMergeTree tree_of_matrix(const SymMatrix& m) {
  require_valid(m);
  const std::size_t n = m.size();

  // Node k < n is the birth vertex of label k; merge vertices follow.
  std::vector<double> height(n);
  std::vector<std::ptrdiff_t> parent(n, -1);
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> owner(n);  // label -> node (changes when absorbed)
  for (std::size_t i = 0; i < n; ++i) {
    height[i] = m(i, i);
    owner[i] = i;
  }
  auto redirect = [&](std::size_t from, std::size_t to) {
    for (auto& p : parent) {
      if (p == static_cast<std::ptrdiff_t>(from)) p = static_cast<std::ptrdiff_t>(to);
    }
    for (auto& o : owner) {
      if (o == from) o = to;
    }
    alive[from] = false;
  };

  DisjointSets sets(n);
  std::vector<std::size_t> top(n);  // component root -> current top node
  std::iota(top.begin(), top.end(), std::size_t{0});

  for (const auto& e : sorted_edges(m)) {
    const auto ri = sets.find(e.i);
    const auto rj = sets.find(e.j);
    if (ri == rj) continue;
    const auto ta = top[ri];
    const auto tb = top[rj];
    const double h = e.value;
    std::size_t merged;
    if (height[ta] == h && height[tb] == h) {
      redirect(tb, ta);
      merged = ta;
    } else if (height[ta] == h) {
      parent[tb] = static_cast<std::ptrdiff_t>(ta);
      merged = ta;
    } else if (height[tb] == h) {
      parent[ta] = static_cast<std::ptrdiff_t>(tb);
      merged = tb;
    } else {
      merged = height.size();
      height.push_back(h);
      parent.push_back(-1);
      alive.push_back(true);
      parent[ta] = static_cast<std::ptrdiff_t>(merged);
      parent[tb] = static_cast<std::ptrdiff_t>(merged);
    }
    top[sets.unite(ri, rj)] = merged;
  }

  // Renumber surviving nodes 0..k-1 in creation order.
  std::vector<VertexId> id(height.size(), -1);
  VertexId next = 0;
  TreeDescription d;
  for (std::size_t k = 0; k < height.size(); ++k) {
    if (!alive[k]) continue;
    id[k] = next++;
    d.vertices.push_back({id[k], height[k]});
  }
  for (std::size_t k = 0; k < height.size(); ++k) {
    if (alive[k] && parent[k] >= 0) d.edges.emplace_back(id[k], id[parent[k]]);
  }
  std::vector<VertexId> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = id[owner[i]];
  return LabeledMergeTree(MergeTree(d), std::move(labels));
}

SymMatrix ultrafy(const SymMatrix& m) {
  require_valid(m);
  const std::size_t n = m.size();
  SymMatrix u(n);
  for (std::size_t i = 0; i < n; ++i) u.set(i, i, m(i, i));
  DisjointSets sets(n);
  std::vector<std::vector<std::size_t>> members(n);
  for (std::size_t i = 0; i < n; ++i) members[i] = {i};
  for (const auto& e : sorted_edges(m)) {
    const auto ri = sets.find(e.i);
    const auto rj = sets.find(e.j);
    if (ri == rj) continue;
    for (auto a : members[ri]) {
      for (auto b : members[rj]) u.set(a, b, e.value);
    }
    const auto root = sets.unite(ri, rj);
    const auto other = root == ri ? rj : ri;
    members[root].insert(members[root].end(), members[other].begin(), members[other].end());
    members[other].clear();
  }
  return u;
}

}  // namespace mt
