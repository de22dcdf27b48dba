#include "mergetree/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "json.hpp"

namespace mt::io {

using nlohmann::json;

namespace {

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

// 1-based line of every element of the array stored under `key` in the
// top-level object.
std::vector<std::size_t> element_lines(std::string_view text, std::string_view key) {
  std::vector<std::size_t> lines;
  std::size_t line = 1;
  int depth = 0;
  bool in_string = false;
  bool escaped = false;
  bool capture = false;
  bool expect_element = false;
  std::string current;
  std::string last_key;
  for (char c : text) {
    if (in_string) {
      if (escaped) {
        escaped = false;
      } else if (c == '\\') {
        escaped = true;
      } else if (c == '"') {
        in_string = false;
        if (depth == 1) last_key = current;
      } else {
        current += c;
      }
      continue;
    }
    if (c == '\n') {
      ++line;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (capture && depth == 2 && expect_element && c != ']') {
      lines.push_back(line);
      expect_element = false;
    }
    switch (c) {
      case '"':
        in_string = true;
        current.clear();
        break;
      case '[':
        if (depth == 1 && last_key == key) {
          capture = true;
          expect_element = true;
        }
        ++depth;
        break;
      case '{':
        ++depth;
        break;
      case ']':
      case '}':
        --depth;
        if (capture && depth == 1) capture = false;
        break;
      case ',':
        if (capture && depth == 2) expect_element = true;
        break;
      default:
        break;
    }
  }
  return lines;
}

std::string at_line(std::size_t line, const std::string& msg) {
  return "line " + std::to_string(line) + ": " + msg;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(at_line(line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1), e.what()));
  }
}

VertexId as_id(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw ParseError(what + " must be an integer");
  return j.get<VertexId>();
}

double as_number(const json& j, const std::string& what) {
  if (!j.is_number()) throw ParseError(what + " must be a number");
  return j.get<double>();
}

std::string ids_json(const MergeTree& t, VertexId base) {
  auto p = t.parent(base);
  return "[" + std::to_string(base) + ", " + (p ? std::to_string(*p) : "null") + "]";
}

std::string point_json(const MergeTree& t, const PointOnTree& p, int tree) {
  return "{\"tree\": " + std::to_string(tree) + ", \"edge\": " + ids_json(t, p.base) +
         ", \"height\": " + format_number(p.height) + "}";
}

PointOnTree point_from_json(const json& j) {
  if (!j.is_object() || !j.contains("edge") || !j.contains("height")) {
    throw ParseError("point needs \"edge\" and \"height\"");
  }
  const auto& e = j.at("edge");
  if (!e.is_array() || e.empty()) throw ParseError("point edge must be [base, parent]");
  return {as_id(e.at(0), "edge endpoint"), as_number(j.at("height"), "point height")};
}

struct RawTree {
  TreeDescription description;
  std::vector<VertexId> labels;
};

// Shared by tree files and the trees embedded in map files. `lines` (if
// non-empty) gives the source line of each vertex / edge for messages.
RawTree tree_from_json(const json& j, const std::vector<std::size_t>& vertex_lines,
                       const std::vector<std::size_t>& edge_lines) {
  auto where = [](const std::vector<std::size_t>& lines, std::size_t k, const std::string& msg) {
    return k < lines.size() ? at_line(lines[k], msg) : msg;
  };
  if (!j.is_object()) throw ParseError(at_line(1, "tree must be a JSON object"));
  if (!j.contains("vertices") || !j.at("vertices").is_array()) {
    throw ParseError(at_line(1, "missing \"vertices\" array"));
  }
  RawTree raw;
  std::map<long long, std::pair<VertexId, std::size_t>> label_owner;
  const auto& vertices = j.at("vertices");
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    const auto& v = vertices[k];
    try {
      if (!v.is_object() || !v.contains("id") || !v.contains("height")) {
        throw ParseError("vertex needs \"id\" and \"height\"");
      }
      VertexSpec spec{as_id(v.at("id"), "vertex id"), as_number(v.at("height"), "vertex height")};
      raw.description.vertices.push_back(spec);
      if (v.contains("labels")) {
        const auto& ls = v.at("labels");
        if (!ls.is_array()) throw ParseError("labels must be an array");
        for (const auto& l : ls) {
          const auto label = as_id(l, "label");
          if (label < 1) throw ParseError("labels start at 1");
          if (label_owner.contains(label)) {
            throw ParseError("label " + std::to_string(label) + " used more than once");
          }
          label_owner[label] = {spec.id, k};
        }
      }
    } catch (const ParseError& e) {
      throw ParseError(where(vertex_lines, k, e.what()));
    }
  }
  if (j.contains("edges")) {
    const auto& edges = j.at("edges");
    if (!edges.is_array()) throw ParseError(at_line(1, "\"edges\" must be an array"));
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const auto& e = edges[k];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer()) {
        throw ParseError(where(edge_lines, k, "edge must be [childId, parentId]"));
      }
      raw.description.edges.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
    }
  }
  long long expected = 1;
  for (const auto& [label, owner] : label_owner) {
    if (label != expected) {
      throw ParseError(at_line(vertex_lines.empty() ? 1 : vertex_lines.front(),
                               "labels must cover 1.." + std::to_string(label_owner.size()) +
                                   "; label " + std::to_string(expected) + " is missing"));
    }
    raw.labels.push_back(owner.first);
    ++expected;
  }
  return raw;
}

void throw_violations(const TreeFile& file, const ValidationReport& report) {
  std::string msg;
  for (const auto& line : describe_violations(file, report)) {
    if (!msg.empty()) msg += "\n";
    msg += line;
  }
  throw ParseError(msg);
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

double parse_double(const std::string& tok, std::size_t line) {
  std::string lower = tok;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "inf" || lower == "+inf" || lower == "infinity") {
    return std::numeric_limits<double>::infinity();
  }
  double value = 0.0;
  const char* first = tok.data();
  if (!tok.empty() && tok.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(at_line(line, "not a number: '" + tok + "'"));
  }
  return value;
}

}  // namespace

std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

TreeFile read_tree_file(std::string_view text) {
  const auto j = parse_json(text);
  TreeFile file;
  file.vertex_lines = element_lines(text, "vertices");
  file.edge_lines = element_lines(text, "edges");
  auto raw = tree_from_json(j, file.vertex_lines, file.edge_lines);
  file.description = std::move(raw.description);
  file.labels = std::move(raw.labels);
  return file;
}

std::vector<std::string> describe_violations(const TreeFile& file,
                                             const ValidationReport& report) {
  std::vector<std::string> out;
  for (const auto& v : report.violations) {
    std::optional<std::size_t> line;
    if (v.edge_index && *v.edge_index < file.edge_lines.size()) {
      line = file.edge_lines[*v.edge_index];
    } else if (v.vertex) {
      const auto& vs = file.description.vertices;
      for (std::size_t k = 0; k < vs.size() && k < file.vertex_lines.size(); ++k) {
        if (vs[k].id == *v.vertex) {
          line = file.vertex_lines[k];
          break;
        }
      }
    }
    out.push_back(line ? at_line(*line, v.message) : v.message);
  }
  return out;
}

TreeFile parse_tree_json(std::string_view text) {
  auto file = read_tree_file(text);
  const auto report = validate_tree(file.description);
  if (!report.ok()) throw_violations(file, report);
  return file;
}

std::string tree_json(const MergeTree& tree) {
  std::string out = "{\n  \"vertices\": [\n";
  const auto& ids = tree.vertex_ids();
  for (std::size_t k = 0; k < ids.size(); ++k) {
    out += "    {\"id\": " + std::to_string(ids[k]) +
           ", \"height\": " + format_number(tree.height(ids[k])) + ", \"labels\": []}";
    out += k + 1 < ids.size() ? ",\n" : "\n";
  }
  out += "  ],\n  \"edges\": [";
  bool first = true;
  for (auto v : ids) {
    if (auto p = tree.parent(v)) {
      out += first ? "\n" : ",\n";
      out += "    [" + std::to_string(v) + ", " + std::to_string(*p) + "]";
      first = false;
    }
  }
  out += first ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

std::string tree_json(const LabeledMergeTree& tree) {
  const auto& t = tree.tree();
  std::string out = "{\n  \"vertices\": [\n";
  const auto& ids = t.vertex_ids();
  for (std::size_t k = 0; k < ids.size(); ++k) {
    out += "    {\"id\": " + std::to_string(ids[k]) +
           ", \"height\": " + format_number(t.height(ids[k])) + ", \"labels\": [";
    const auto ls = tree.labels_at(ids[k]);
    for (std::size_t m = 0; m < ls.size(); ++m) {
      out += (m ? ", " : "") + std::to_string(ls[m] + 1);
    }
    out += "]}";
    out += k + 1 < ids.size() ? ",\n" : "\n";
  }
  out += "  ],\n  \"edges\": [";
  bool first = true;
  for (auto v : ids) {
    if (auto p = t.parent(v)) {
      out += first ? "\n" : ",\n";
      out += "    [" + std::to_string(v) + ", " + std::to_string(*p) + "]";
      first = false;
    }
  }
  out += first ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

SymMatrix parse_matrix_text(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t k = 0;
  auto next_nonempty = [&]() -> std::optional<std::pair<std::size_t, std::vector<std::string>>> {
    while (k < lines.size()) {
      auto toks = tokens(lines[k]);
      ++k;
      if (!toks.empty()) return std::make_pair(k, toks);
    }
    return std::nullopt;
  };
  auto header = next_nonempty();
  if (!header) throw ParseError("line 1: empty matrix file");
  if (header->second.size() != 1) throw ParseError(at_line(header->first, "expected dimension n"));
  std::size_t n = 0;
  {
    const auto& tok = header->second.front();
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), n);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || n == 0) {
      throw ParseError(at_line(header->first, "dimension must be a positive integer"));
    }
  }
  std::vector<std::vector<double>> rows;
  std::vector<std::size_t> row_line;
  while (rows.size() < n) {
    auto row = next_nonempty();
    if (!row) {
      throw ParseError(at_line(lines.size() + 1, "expected " + std::to_string(n) + " rows, found " +
                                                     std::to_string(rows.size())));
    }
    if (row->second.size() != n) {
      throw ParseError(at_line(row->first, "expected " + std::to_string(n) + " entries"));
    }
    std::vector<double> values;
    for (const auto& tok : row->second) {
      const double x = parse_double(tok, row->first);
      if (!std::isfinite(x)) throw ParseError(at_line(row->first, "entries must be finite"));
      values.push_back(x);
    }
    rows.push_back(std::move(values));
    row_line.push_back(row->first);
  }
  if (auto extra = next_nonempty()) throw ParseError(at_line(extra->first, "unexpected extra row"));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(rows[i][j] - rows[j][i]) > 1e-12) {
        throw ParseError(at_line(row_line[j], "matrix is not symmetric at (" +
                                                  std::to_string(i + 1) + ", " +
                                                  std::to_string(j + 1) + ")"));
      }
      const double avg = (rows[i][j] + rows[j][i]) / 2.0;
      rows[i][j] = avg;
      rows[j][i] = avg;
    }
  }
  return SymMatrix(rows);
}

std::string matrix_text(const SymMatrix& m) {
  std::string out = std::to_string(m.size()) + "\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      out += (j ? " " : "") + format_number(m(i, j));
    }
    out += "\n";
  }
  return out;
}

PersistenceDiagram parse_diagram_text(std::string_view text) {
  PersistenceDiagram d;
  const auto lines = split_lines(text);
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const auto toks = tokens(lines[k]);
    if (toks.empty()) continue;
    if (toks.size() != 2) throw ParseError(at_line(k + 1, "expected 'birth death'"));
    PersistencePoint p{parse_double(toks[0], k + 1), parse_double(toks[1], k + 1)};
    if (!std::isfinite(p.birth)) throw ParseError(at_line(k + 1, "birth must be finite"));
    if (!(p.birth < p.death)) throw ParseError(at_line(k + 1, "death must exceed birth"));
    d.points.push_back(p);
  }
  return d;
}

std::string diagram_text(const PersistenceDiagram& d) {
  std::string out;
  for (const auto& p : d.points) out += format_number(p.birth) + " " + format_number(p.death) + "\n";
  return out;
}

std::string pairing_json(const MergeTree& first, const MergeTree& second,
                         const LabelPairing& pairing) {
  std::string out = "{\"pairs\": [";
  for (std::size_t k = 0; k < pairing.pairs.size(); ++k) {
    out += k ? ",\n  " : "\n  ";
    out += "[" + point_json(first, pairing.pairs[k].first, 1) + ", " +
           point_json(second, pairing.pairs[k].second, 2) + "]";
  }
  out += pairing.pairs.empty() ? "]}\n" : "\n]}\n";
  return out;
}

LabelPairing parse_pairing_json(std::string_view text) {
  const auto j = parse_json(text);
  if (!j.is_object() || !j.contains("pairs") || !j.at("pairs").is_array()) {
    throw ParseError("line 1: missing \"pairs\" array");
  }
  LabelPairing out;
  for (const auto& pair : j.at("pairs")) {
    if (!pair.is_array() || pair.size() != 2) throw ParseError("each pair must hold two points");
    PointOnTree a = point_from_json(pair[0]);
    PointOnTree b = point_from_json(pair[1]);
    if (pair[0].value("tree", 1) == 2) std::swap(a, b);
    out.pairs.emplace_back(a, b);
  }
  return out;
}

VertexMap parse_map_json(std::string_view text) {
  const auto j = parse_json(text);
  if (!j.is_object() || !j.contains("delta") || !j.contains("source") || !j.contains("target") ||
      !j.contains("images")) {
    throw ParseError("line 1: map needs \"delta\", \"source\", \"target\" and \"images\"");
  }
  auto tree_at = [&](const char* key) {
    auto raw = tree_from_json(j.at(key), {}, {});
    auto report = validate_tree(raw.description);
    if (!report.ok()) {
      throw ParseError(std::string(key) + " tree: " + report.violations.front().message);
    }
    return MergeTree(raw.description);
  };
  VertexMap map{tree_at("source"), tree_at("target"), as_number(j.at("delta"), "delta"), {}};
  const auto& images = j.at("images");
  if (!images.is_array()) throw ParseError("\"images\" must be an array");
  const auto image_lines = element_lines(text, "images");
  for (std::size_t k = 0; k < images.size(); ++k) {
    try {
      const auto& im = images[k];
      if (!im.is_object() || !im.contains("vertex")) throw ParseError("image needs \"vertex\"");
      map.images[as_id(im.at("vertex"), "vertex")] = point_from_json(im);
    } catch (const ParseError& e) {
      throw ParseError(k < image_lines.size() ? at_line(image_lines[k], e.what()) : e.what());
    }
  }
  return map;
}

std::string map_json(const VertexMap& map) {
  auto indent = [](const std::string& s) {
    std::string out;
    for (std::size_t k = 0; k < s.size(); ++k) {
      out += s[k];
      if (s[k] == '\n' && k + 1 < s.size()) out += "  ";
    }
    while (!out.empty() && out.back() == '\n') out.pop_back();
    return out;
  };
  std::string out = "{\n  \"delta\": " + format_number(map.delta) + ",\n";
  out += "  \"source\": " + indent(tree_json(map.source)) + ",\n";
  out += "  \"target\": " + indent(tree_json(map.target)) + ",\n";
  out += "  \"images\": [";
  bool first = true;
  for (const auto& [v, p] : map.images) {
    out += first ? "\n" : ",\n";
    out += "    {\"vertex\": " + std::to_string(v) + ", \"edge\": " + ids_json(map.target, p.base) +
           ", \"height\": " + format_number(p.height) + "}";
    first = false;
  }
  out += "\n  ]\n}\n";
  return out;
}

std::string tree_dot(const MergeTree& tree, const std::vector<VertexId>& labels,
                     std::string_view name) {
  std::map<VertexId, std::vector<std::size_t>> labels_at;
  for (std::size_t k = 0; k < labels.size(); ++k) labels_at[labels[k]].push_back(k + 1);
  std::string out = "digraph " + std::string(name) + " {\n  rankdir=BT;\n  node [shape=circle];\n";
  std::map<double, std::vector<VertexId>> by_height;
  for (auto v : tree.vertex_ids()) {
    by_height[tree.height(v)].push_back(v);
    std::string text = std::to_string(v) + "\\nh=" + format_number(tree.height(v));
    if (auto it = labels_at.find(v); it != labels_at.end()) {
      text += "\\n{";
      for (std::size_t m = 0; m < it->second.size(); ++m) {
        text += (m ? "," : "") + std::to_string(it->second[m]);
      }
      text += "}";
    }
    out += "  v" + std::to_string(v) + " [label=\"" + text + "\"" +
           (labels_at.contains(v) ? ", style=filled, fillcolor=lightblue" : "") + "];\n";
  }
  out += "  root [label=\"inf\", shape=plaintext];\n";
  for (auto v : tree.vertex_ids()) {
    auto p = tree.parent(v);
    out += "  v" + std::to_string(v) + " -> " + (p ? "v" + std::to_string(*p) : "root") +
           " [arrowhead=none];\n";
  }
  // Same height, same rank; consecutive heights are chained invisibly so the
  // vertical order follows the height function.
  std::string previous;
  for (const auto& [h, vs] : by_height) {
    out += "  { rank=same;";
    for (auto v : vs) out += " v" + std::to_string(v) + ";";
    out += " }\n";
    const std::string head = "v" + std::to_string(vs.front());
    if (!previous.empty()) out += "  " + previous + " -> " + head + " [style=invis];\n";
    previous = head;
  }
  out += "}\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace mt::io
