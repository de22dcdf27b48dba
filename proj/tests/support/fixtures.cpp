#include "fixtures.hpp"

namespace mt::testing {

MergeTree make_tree(std::vector<VertexSpec> vertices,
                    std::vector<std::pair<VertexId, VertexId>> edges) {
  return MergeTree(TreeDescription{std::move(vertices), std::move(edges)});
}

LabeledMergeTree make_labeled(std::vector<VertexSpec> vertices,
                              std::vector<std::pair<VertexId, VertexId>> edges,
                              std::vector<VertexId> labels) {
  return LabeledMergeTree(make_tree(std::move(vertices), std::move(edges)), std::move(labels));
}

LabeledMergeTree cherry(double h) {
  return make_labeled({{0, 0}, {1, 0}, {2, h}}, {{0, 2}, {1, 2}}, {0, 1});
}

LabeledMergeTree degenerate_labels_tree() {
  return make_labeled({{0, 1}, {1, 2}, {2, 3}, {3, 4}}, {{1, 2}, {0, 3}, {2, 3}}, {0, 0, 2, 1});
}

SymMatrix degenerate_labels_matrix() {
  return SymMatrix({{1, 1, 4, 4}, {1, 1, 4, 4}, {4, 4, 3, 3}, {4, 4, 3, 2}});
}

// Source: a=0 (1), b=1 (2), c=2 (4), d=3 (0), p=4 (4) over a and b,
// q=5 (5) over c and d, r=6 (7) on top.
MergeTree map_example_source() {
  return make_tree({{0, 1}, {1, 2}, {2, 4}, {3, 0}, {4, 4}, {5, 5}, {6, 7}},
                   {{0, 4}, {1, 4}, {2, 5}, {3, 5}, {4, 6}, {5, 6}});
}

// Target: e5=0 (0), e6=1 (2), e4=2 (1), e7=3 (4), m1=4 (5) over e5 and e6,
// m2=5 (5) over e4 and e7, top=6 (7).
MergeTree map_example_target() {
  return make_tree({{0, 0}, {1, 2}, {2, 1}, {3, 4}, {4, 5}, {5, 5}, {6, 7}},
                   {{0, 4}, {1, 4}, {2, 5}, {3, 5}, {4, 6}, {5, 6}});
}

VertexMap map_example() {
  VertexMap m{map_example_source(), map_example_target(), 1.0, {}};
  m.images = {{0, {0, 2}}, {1, {1, 3}}, {2, {5, 5}}, {3, {2, 1}},
              {4, {4, 5}}, {5, {5, 6}}, {6, {6, 8}}};
  return m;
}

SymMatrix map_example_source_matrix(bool alternative) {
  const double m37 = alternative ? 4 : 5;
  const double m47 = alternative ? 5 : 4;
  return SymMatrix({{1, 4, 7, 7, 1, 4, 7},
                    {4, 2, 7, 7, 4, 2, 7},
                    {7, 7, 4, 5, 7, 7, m37},
                    {7, 7, 5, 0, 7, 7, m47},
                    {1, 4, 7, 7, 1, 4, 7},
                    {4, 2, 7, 7, 4, 2, 7},
                    {7, 7, m37, m47, 7, 7, 4}});
}

SymMatrix map_example_target_matrix() {
  return SymMatrix({{2, 5, 7, 7, 2, 5, 7},
                    {5, 3, 7, 7, 5, 3, 7},
                    {7, 7, 5, 5, 7, 7, 5},
                    {7, 7, 5, 1, 7, 7, 5},
                    {2, 5, 7, 7, 0, 5, 7},
                    {5, 3, 7, 7, 5, 2, 7},
                    {7, 7, 5, 5, 7, 7, 4}});
}

// Labels 1 and 2 merge at 2 and label 3 joins at 4.
LabeledMergeTree averaging_first() {
  return make_labeled({{0, 0}, {1, 0}, {2, 0}, {3, 2}, {4, 4}},
                      {{0, 3}, {1, 3}, {3, 4}, {2, 4}}, {0, 1, 2});
}

// Labels 1 and 3 merge at 2 and label 2 joins at 4.
LabeledMergeTree averaging_second() {
  return make_labeled({{0, 0}, {1, 0}, {2, 0}, {3, 2}, {4, 4}},
                      {{0, 3}, {2, 3}, {3, 4}, {1, 4}}, {0, 1, 2});
}

}  // namespace mt::testing
