// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "../support/fixtures.hpp"
#include "../support/generators.hpp"
#include "../support/oracles.hpp"
#include "mergetree/good_map.hpp"
#include "mergetree/interleaving.hpp"
#include "mergetree/persistence.hpp"
#include "mergetree/unlabeled.hpp"

using namespace mt;
using mt::testing::Rng;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(17);
  s << x;
  return s.str();
}

// Pair of labeled trees sharing a label count.
std::pair<LabeledMergeTree, LabeledMergeTree> labeled_pair(Rng& rng) {
  std::uniform_int_distribution<std::size_t> leaves(1, 5);
  const std::size_t la = leaves(rng);
  const std::size_t lb = leaves(rng);
  const std::size_t n = std::max(la, lb) + std::uniform_int_distribution<std::size_t>(0, 3)(rng);
  return {mt::testing::random_labeled_tree_with(rng, la, n),
          mt::testing::random_labeled_tree_with(rng, lb, n)};
}

Outcome bijection() {
  Outcome o;
  const auto start = Clock::now();
  Rng rng(101);
  for (int k = 0; k < 1000; ++k) {
    const auto m = ultrafy(mt::testing::random_valid_matrix(rng, 1 + k % 8, k % 2 == 1));
    if (!(induced_matrix(tree_of_matrix(m)) == m)) o.fail("matrix round trip failed at sample " + std::to_string(k));
  }
  for (int k = 0; k < 1000; ++k) {
    const auto t = mt::testing::random_labeled_tree(rng, 1 + k % 6);
    if (!structurally_equal(tree_of_matrix(induced_matrix(t)), canonicalize(t))) {
      o.fail("tree round trip failed at sample " + std::to_string(k));
    }
  }
  const double secs = seconds_since(start);
  if (secs >= 10.0) o.fail("runtime " + fmt(secs) + " s");
  if (o.pass) o.detail = "1000 matrices + 1000 trees exact, " + fmt(secs) + " s";
  return o;
}

Outcome minimax() {
  Outcome o;
  const auto start = Clock::now();
  Rng rng(202);
  for (int k = 0; k < 500; ++k) {
    const auto m = mt::testing::random_valid_matrix(rng, 1 + k % 6, k % 2 == 1);
    if (!(ultrafy(m) == mt::testing::minimax_path_matrix(m))) o.fail("mismatch at sample " + std::to_string(k));
  }
  const double secs = seconds_since(start);
  if (secs >= 30.0) o.fail("runtime " + fmt(secs) + " s");
  if (o.pass) o.detail = "500 matrices exact, " + fmt(secs) + " s";
  return o;
}

Outcome stability() {
  Outcome o;
  Rng rng(303);
  double worst = -INFINITY;
  for (int k = 0; k < 1000; ++k) {
    const std::size_t n = 1 + k % 8;
    const bool continuous = k % 2 == 1;
    const auto m = mt::testing::random_valid_matrix(rng, n, continuous);
    const auto p = mt::testing::random_valid_matrix(rng, n, continuous);
    const double lhs = labeled_interleaving(tree_of_matrix(m), tree_of_matrix(p));
    const double rhs = linf_distance(m, p);
    worst = std::max(worst, lhs - rhs);
    if (lhs > rhs + 1e-12) o.fail("sample " + std::to_string(k) + ": " + fmt(lhs) + " > " + fmt(rhs));
  }
  if (o.pass) o.detail = "1000 pairs, max(lhs - rhs) = " + fmt(worst);
  return o;
}

Outcome geodesics() {
  Outcome o;
  Rng rng(404);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> cuts(1, 8);
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const auto [a, b] = labeled_pair(rng);
    const double d = labeled_interleaving(a, b);
    for (int part = 0; part < 5; ++part) {
      std::vector<double> lambdas{0.0, 1.0};
      for (int c = cuts(rng); c > 0; --c) lambdas.push_back(unit(rng));
      std::sort(lambdas.begin(), lambdas.end());
      for (std::size_t s = 0; s + 1 < lambdas.size(); ++s) {
        const double seg = labeled_interleaving(geodesic_point(a, b, lambdas[s]),
                                                geodesic_point(a, b, lambdas[s + 1]));
        const double err = std::abs(seg - (lambdas[s + 1] - lambdas[s]) * d);
        worst = std::max(worst, err);
        if (err > 1e-9) o.fail("segment error " + fmt(err) + " at pair " + std::to_string(k));
      }
      const std::size_t samples = static_cast<std::size_t>(cuts(rng));
      try {
        const double len = geodesic_length(a, b, samples);
        worst = std::max(worst, std::abs(len - d));
        if (std::abs(len - d) > 1e-9) o.fail("length " + fmt(len) + " vs " + fmt(d));
      } catch (const std::logic_error& e) {
        o.fail(e.what());
      }
    }
  }
  if (o.pass) o.detail = "200 pairs x 5 partitions, max error " + fmt(worst);
  return o;
}

Outcome centers() {
  Outcome o;
  Rng rng(505);
  std::uniform_int_distribution<std::size_t> count(1, 5);
  std::uniform_int_distribution<std::size_t> labels(1, 6);
  double worst = 0.0;
  std::size_t perturbations = 0;
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = labels(rng);
    std::vector<LabeledMergeTree> trees;
    std::vector<SymMatrix> ms;
    for (std::size_t i = count(rng); i > 0; --i) {
      const std::size_t leaves = std::uniform_int_distribution<std::size_t>(1, n)(rng);
      trees.push_back(mt::testing::random_labeled_tree_with(rng, leaves, n));
      ms.push_back(induced_matrix(trees.back()));
    }
    double range = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double lo = INFINITY;
        double hi = -INFINITY;
        for (const auto& m : ms) {
          lo = std::min(lo, m(i, j));
          hi = std::max(hi, m(i, j));
        }
        range = std::max(range, hi - lo);
      }
    }
    const auto c = one_center(trees);
    const double err = std::abs(c.radius - range / 2.0);
    worst = std::max(worst, err);
    if (err > 1e-12) o.fail("radius " + fmt(c.radius) + " vs half range " + fmt(range / 2.0));

    const auto centre = induced_matrix(c.center);
    const double scale = std::max(2.0 * c.radius, 0.5);
    std::uniform_real_distribution<double> noise(-scale, scale);
    for (int trial = 0; trial < 200; ++trial) {
      SymMatrix p(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) p.set(i, j, centre(i, j) + noise(rng));
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) p.set(i, j, std::max({p(i, j), p(i, i), p(j, j)}));
      }
      const auto candidate = tree_of_matrix(ultrafy(p));
      double far = 0.0;
      for (const auto& t : trees) far = std::max(far, labeled_interleaving(candidate, t));
      ++perturbations;
      if (far < c.radius - 1e-12) o.fail("perturbation beats the center: " + fmt(far) + " < " + fmt(c.radius));
    }
  }
  if (o.pass) {
    o.detail = "100 collections, max radius error " + fmt(worst) + ", " + std::to_string(perturbations) +
               " perturbations never closer";
  }
  return o;
}

Outcome unlabeled(std::size_t& diagnostics) {
  Outcome o;
  const auto start = Clock::now();
  Rng rng(606);
  std::uniform_int_distribution<std::size_t> leaves(1, 4);
  std::uniform_int_distribution<std::size_t> extra(0, 2);
  for (int k = 0; k < 100; ++k) {
    const auto a = mt::testing::random_tree(rng, leaves(rng));
    const auto b = mt::testing::random_tree(rng, leaves(rng));
    const auto r = unlabeled_interleaving(a, b);
    const std::string at = " at pair " + std::to_string(k);
    for (int l = 0; l < 50; ++l) {
      const auto p = apply_pairing(a, b, mt::testing::random_pairing(rng, a, b, extra(rng)));
      const double dl = labeled_interleaving(p.first, p.second);
      if (r.distance > dl + 1e-9) o.fail("labeling below the distance" + at);
    }
    const auto w = apply_pairing(a, b, r.witness);
    const double dw = labeled_interleaving(w.first, w.second);
    if (std::abs(dw - r.distance) > 1e-9) o.fail("witness gives " + fmt(dw) + " not " + fmt(r.distance) + at);
    if (!r.certified) o.fail("bisection check found a smaller feasible value" + at);
    const auto map = map_from_labeling(w.first, w.second, r.distance);
    if (!std::holds_alternative<VertexMap>(map)) {
      o.fail("map_from_labeling infeasible" + at);
    } else if (!verify_delta_good(std::get<VertexMap>(map)).good) {
      o.fail("witness map not good" + at);
    }
    if (bottleneck_tree_distance(a, b) > r.distance + 1e-9) ++diagnostics;
  }
  const double secs = seconds_since(start);
  if (secs >= 120.0) o.fail("runtime " + fmt(secs) + " s");
  if (o.pass) o.detail = "100 pairs x 50 labelings, witnesses exact and certified, " + fmt(secs) + " s";
  return o;
}

VertexMap shift_map(const MergeTree& t, double delta) {
  VertexMap m{t, t, delta, {}};
  for (auto v : t.vertex_ids()) m.images[v] = t.ancestor_at(t.vertex_point(v), t.height(v) + delta);
  return m;
}

Outcome map_labelings() {
  Outcome o;
  Rng rng(707);
  std::uniform_int_distribution<std::size_t> leaves(1, 5);
  double worst = -INFINITY;
  for (int k = 0; k < 100; ++k) {
    std::optional<VertexMap> made;
    if (k % 2 == 0) {
      const auto a = mt::testing::random_tree(rng, leaves(rng));
      const auto b = mt::testing::random_tree(rng, leaves(rng));
      const auto p = apply_pairing(a, b, mt::testing::random_pairing(rng, a, b, k % 3));
      auto r = map_from_labeling(p.first, p.second, labeled_interleaving(p.first, p.second));
      if (!std::holds_alternative<VertexMap>(r)) {
        o.fail("map construction failed at sample " + std::to_string(k));
        continue;
      }
      made = std::get<VertexMap>(std::move(r));
    } else {
      made = shift_map(mt::testing::random_tree(rng, leaves(rng)), mt::testing::grid_height(rng, 0, 3));
    }
    const auto& map = *made;
    if (!verify_delta_good(map).good) {
      o.fail("constructed map is not good at sample " + std::to_string(k));
      continue;
    }
    const auto lp = apply_pairing(map.source, map.target, labeling_from_map(map));
    const double d = labeled_interleaving(lp.first, lp.second);
    worst = std::max(worst, d - map.delta);
    if (d > map.delta + 1e-12) o.fail("labeled distance " + fmt(d) + " exceeds " + fmt(map.delta));
  }
  if (o.pass) o.detail = "100 maps, max(d - delta) = " + fmt(worst);
  return o;
}

Outcome worked_examples() {
  Outcome o;
  // Degenerate labels example, both directions.
  const auto t3 = mt::testing::degenerate_labels_tree();
  const auto m3 = mt::testing::degenerate_labels_matrix();
  if (!(induced_matrix(t3) == m3)) o.fail("degenerate-label tree does not induce the printed matrix");
  if (!structurally_equal(tree_of_matrix(m3), t3)) o.fail("printed matrix does not rebuild the tree");

  // Map-induced labeling example.
  for (bool alternative : {false, true}) {
    const auto ms = mt::testing::map_example_source_matrix(alternative);
    const auto mtgt = mt::testing::map_example_target_matrix();
    if (linf_distance(ms, mtgt) != 1.0) o.fail("printed matrices are not at distance 1");
    const auto r = map_from_labeling(tree_of_matrix(ms), tree_of_matrix(mtgt), 1.0);
    if (!std::holds_alternative<VertexMap>(r) || !verify_delta_good(std::get<VertexMap>(r)).good) {
      o.fail("reconstructed map is not 1-good");
    }
  }
  const auto map = mt::testing::map_example();
  if (!verify_delta_good(map).good) o.fail("drawn map is not 1-good");
  const auto lp = apply_pairing(map.source, map.target, labeling_from_map(map));
  if (!(induced_matrix(lp.first) == mt::testing::map_example_source_matrix(true)) ||
      !(induced_matrix(lp.second) == mt::testing::map_example_target_matrix())) {
    o.fail("induced labeling differs from the printed matrices");
  }

  // Averaging example.
  const auto a = mt::testing::averaging_first();
  const auto b = mt::testing::averaging_second();
  const auto mean = interpolate(induced_matrix(a), induced_matrix(b), 0.5);
  if (is_ultra(mean)) o.fail("average matrix unexpectedly ultra");
  if (!(induced_matrix(geodesic_point(a, b, 0.5)) == ultrafy(mean))) {
    o.fail("midpoint tree does not induce the ultrafied average");
  }
  if (o.pass) o.detail = "matrix/tree round trip, distance-1 pair with 1-good map, midpoint = U(average)";
  return o;
}

Outcome bottleneck() {
  Outcome o;
  Rng rng(909);
  std::uniform_int_distribution<std::size_t> ess(0, 2);
  for (int k = 0; k < 200; ++k) {
    const std::size_t ea = ess(rng);
    const std::size_t eb = k % 10 == 0 ? ess(rng) : ea;
    const auto a = mt::testing::random_diagram(rng, 6 - ea, ea);
    const auto b = mt::testing::random_diagram(rng, 6 - eb, eb);
    const double fast = bottleneck_distance(a, b);
    const double slow = mt::testing::exhaustive_bottleneck(a, b);
    if (fast != slow) o.fail("sample " + std::to_string(k) + ": " + fmt(fast) + " vs " + fmt(slow));
  }
  if (o.pass) o.detail = "200 diagram pairs exact";
  return o;
}

Outcome axioms() {
  Outcome o;
  Rng rng(1010);
  std::uniform_int_distribution<std::size_t> leaves(1, 3);
  auto check = [&](const std::string& name, double ab, double ba, double bc, double ac) {
    if (std::abs(ab - ba) > 1e-9) o.fail(name + " not symmetric");
    if (ac > ab + bc + 1e-9) o.fail(name + " violates the triangle inequality");
  };
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 4;
    const auto la = mt::testing::random_labeled_tree_with(rng, leaves(rng), n);
    const auto lb = mt::testing::random_labeled_tree_with(rng, leaves(rng), n);
    const auto lc = mt::testing::random_labeled_tree_with(rng, leaves(rng), n);
    check("labeled", labeled_interleaving(la, lb), labeled_interleaving(lb, la), labeled_interleaving(lb, lc),
          labeled_interleaving(la, lc));

    const auto a = mt::testing::random_tree(rng, leaves(rng));
    const auto b = mt::testing::random_tree(rng, leaves(rng));
    const auto c = mt::testing::random_tree(rng, leaves(rng));
    auto du = [](const MergeTree& x, const MergeTree& y) { return unlabeled_interleaving(x, y).distance; };
    check("unlabeled", du(a, b), du(b, a), du(b, c), du(a, c));
    check("bottleneck", bottleneck_tree_distance(a, b), bottleneck_tree_distance(b, a),
          bottleneck_tree_distance(b, c), bottleneck_tree_distance(a, c));
  }
  if (o.pass) o.detail = "100 triples for labeled, unlabeled and bottleneck";
  return o;
}

}  // namespace

int main() {
  std::size_t diagnostics = 0;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"bijection between ultra matrices and labeled trees", bijection},
      {"ultrafication equals the minimax path oracle", minimax},
      {"stability of the tree construction", stability},
      {"geodesic segments and length", geodesics},
      {"1-center radius and optimality", centers},
      {"unlabeled distance equals the best labeling", [&] { return unlabeled(diagnostics); }},
      {"labelings from good maps stay within delta", map_labelings},
      {"worked examples", worked_examples},
      {"bottleneck against exhaustive matching", bottleneck},
      {"metric axioms", axioms},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome out;
    try {
      out = criteria[k].second();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %zu: %s (%s)\n", out.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                out.detail.c_str());
    std::fflush(stdout);
    if (!out.pass) ++failures;
  }
  std::printf("info: bottleneck exceeded unlabeled interleaving on %zu of 100 pairs\n", diagnostics);
  return failures == 0 ? 0 : 1;
}
