#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "mergetree/good_map.hpp"
#include "mergetree/interleaving.hpp"
#include "mergetree/io.hpp"
#include "mergetree/matrix_bridge.hpp"
#include "mergetree/persistence.hpp"
#include "mergetree/unlabeled.hpp"

namespace mt::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string load(const std::string& path) {
  if (!std::filesystem::exists(path)) throw UsageError("no such file: " + path);
  return io::read_file(path);
}

void save(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << content;
}

io::TreeFile tree_file(const std::string& path) {
  try {
    return io::parse_tree_json(load(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

LabeledMergeTree labeled_file(const std::string& path) {
  auto file = tree_file(path);
  try {
    return file.labeled();
  } catch (const DomainError& e) {
    throw DomainError(path + ": " + e.what());
  }
}

SymMatrix matrix_file(const std::string& path) {
  try {
    return io::parse_matrix_text(load(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Interleaving-type distances, geodesics and 1-centers for merge trees", "mtdist"};
  app.require_subcommand(1);

  std::function<int()> action;
  std::string path_a;
  std::string path_b;

  auto* validate = app.add_subcommand("validate", "Check the merge tree invariants of a tree file");
  validate->add_option("tree", path_a)->required();
  validate->callback([&] {
    action = [&] {
      const auto file = io::read_tree_file(load(path_a));
      const auto report = validate_tree(file.description);
      if (report.ok()) {
        out << "ok\n";
        return kExitOk;
      }
      for (const auto& line : io::describe_violations(file, report)) out << line << "\n";
      return kExitDomain;
    };
  });

  auto* induce = app.add_subcommand("induce", "Induced matrix of a labeled tree");
  induce->add_option("tree", path_a)->required();
  induce->callback([&] {
    action = [&] {
      out << io::matrix_text(induced_matrix(labeled_file(path_a)));
      return kExitOk;
    };
  });

  auto* treeify = app.add_subcommand("treeify", "Labeled merge tree of a valid matrix");
  treeify->add_option("matrix", path_a)->required();
  treeify->callback([&] {
    action = [&] {
      out << io::tree_json(tree_of_matrix(matrix_file(path_a)));
      return kExitOk;
    };
  });

  auto* ultra = app.add_subcommand("ultrafy", "Ultra matrix of a valid matrix");
  ultra->add_option("matrix", path_a)->required();
  ultra->callback([&] {
    action = [&] {
      out << io::matrix_text(ultrafy(matrix_file(path_a)));
      return kExitOk;
    };
  });

  auto* dist = app.add_subcommand("dist", "Distances between two trees");
  dist->require_subcommand(1);
  auto* labeled = dist->add_subcommand("labeled", "Labeled interleaving distance");
  labeled->add_option("t1", path_a)->required();
  labeled->add_option("t2", path_b)->required();
  labeled->callback([&] {
    action = [&] {
      const auto a = labeled_file(path_a);
      const auto b = labeled_file(path_b);
      out << io::format_number(labeled_interleaving(a, b)) << "\n";
      return kExitOk;
    };
  });

  std::uint64_t budget = UnlabeledOptions{}.budget;
  std::string witness_path;
  auto* unlabeled = dist->add_subcommand("unlabeled", "Interleaving distance with a witness labeling");
  unlabeled->add_option("t1", path_a)->required();
  unlabeled->add_option("t2", path_b)->required();
  unlabeled->add_option("--budget", budget, "Search states per feasibility test")
      ->check(CLI::PositiveNumber);
  unlabeled->add_option("--witness", witness_path, "Write the witness pairing JSON here");
  unlabeled->callback([&] {
    action = [&] {
      const auto a = tree_file(path_a).tree();
      const auto b = tree_file(path_b).tree();
      UnlabeledOptions options;
      options.budget = budget;
      const auto result = unlabeled_interleaving(a, b, options);
      out << io::format_number(result.distance) << "\n";
      const auto witness = io::pairing_json(a, b, result.witness);
      if (witness_path.empty()) {
        err << witness;
      } else {
        save(witness_path, witness);
      }
      if (!result.certified) {
        err << "warning: candidate set incomplete; distance lies in ["
            << io::format_number(result.lower_bound) << ", "
            << io::format_number(result.distance) << "]\n";
      }
      return kExitOk;
    };
  });

  auto* bottleneck = dist->add_subcommand("bottleneck", "Bottleneck distance of the diagrams");
  bottleneck->add_option("t1", path_a)->required();
  bottleneck->add_option("t2", path_b)->required();
  bottleneck->callback([&] {
    action = [&] {
      const auto a = tree_file(path_a).tree();
      const auto b = tree_file(path_b).tree();
      out << io::format_number(bottleneck_tree_distance(a, b)) << "\n";
      return kExitOk;
    };
  });

  double lambda = 0.0;
  std::string dot_path;
  auto* geodesic = app.add_subcommand("geodesic", "Point on the geodesic between labeled trees");
  geodesic->add_option("t1", path_a)->required();
  geodesic->add_option("t2", path_b)->required();
  geodesic->add_option("--lambda", lambda, "Position in [0, 1]")->required();
  geodesic->add_option("--dot", dot_path, "Write a Graphviz rendering here");
  geodesic->callback([&] {
    action = [&] {
      const auto a = labeled_file(path_a);
      const auto b = labeled_file(path_b);
      const auto t = geodesic_point(a, b, lambda);
      out << io::tree_json(t);
      if (!dot_path.empty()) {
        std::vector<VertexId> labels(t.label_vertices().begin(), t.label_vertices().end());
        save(dot_path, io::tree_dot(t.tree(), labels, "geodesic"));
      }
      return kExitOk;
    };
  });

  std::vector<std::string> center_paths;
  auto* center = app.add_subcommand("center", "1-center of labeled trees");
  center->add_option("trees", center_paths)->required();
  center->callback([&] {
    action = [&] {
      std::vector<LabeledMergeTree> trees;
      for (const auto& p : center_paths) trees.push_back(labeled_file(p));
      const auto result = one_center(trees);
      out << io::tree_json(result.center);
      err << "radius: " << io::format_number(result.radius) << "\n";
      return kExitOk;
    };
  });

  auto* pd = app.add_subcommand("pd", "Persistence diagram of a tree");
  pd->add_option("tree", path_a)->required();
  pd->callback([&] {
    action = [&] {
      out << io::diagram_text(persistence_diagram(tree_file(path_a).tree()));
      return kExitOk;
    };
  });

  auto* checkmap = app.add_subcommand("checkmap", "Check whether a map file is delta-good");
  checkmap->add_option("map", path_a)->required();
  checkmap->callback([&] {
    action = [&] {
      const auto map = io::parse_map_json(load(path_a));
      const auto verdict = verify_delta_good(map);
      if (verdict.good) {
        out << "good\n";
        return kExitOk;
      }
      out << "violated (" << std::string(static_cast<std::size_t>(*verdict.violated), 'i')
          << "): " << verdict.witness << "\n";
      return kExitDomain;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace mt::cli
