#include "rdd/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <queue>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "rdd/validation.hpp"

namespace rdd {

namespace {

using EdgeDecl = std::tuple<std::string, std::string, double>;

// Locations ("line 7", "edges[3]") run parallel to the declarations so parse
// errors can name the offending input. Empty vectors fall back to indices.
struct Located {
  std::vector<WeightedGraph::Node> nodes;
  std::vector<EdgeDecl> edges;
  std::vector<std::string> node_where;
  std::vector<std::string> edge_where;

  std::string node_at(std::size_t i) const {
    return i < node_where.size() ? node_where[i] : "node " + std::to_string(i);
  }
  std::string edge_at(std::size_t i) const {
    return i < edge_where.size() ? edge_where[i] : "edge " + std::to_string(i);
  }
};

void validate_declarations(const Located& in) {
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < in.nodes.size(); ++i) {
    const auto& node = in.nodes[i];
    if (node.id.empty()) {
      throw ValidationError(in.node_at(i) + ": empty node id");
    }
    if (!seen.emplace(node.id, i).second) {
      throw ValidationError(in.node_at(i) + ": duplicate node id '" + node.id + "'");
    }
    for (std::size_t f = 0; f < node.features.size(); ++f) {
      if (!std::isfinite(node.features[f]) || node.features[f] < 0.0) {
        throw ValidationError(in.node_at(i) + ": feature " + std::to_string(f) +
                              " of node '" + node.id +
                              "' must be a finite nonnegative number");
      }
    }
    if (node.features.size() != in.nodes.front().features.size()) {
      throw ValidationError(in.node_at(i) + ": node '" + node.id + "' has " +
                            std::to_string(node.features.size()) +
                            " features, expected " +
                            std::to_string(in.nodes.front().features.size()));
    }
  }
  std::set<std::pair<std::size_t, std::size_t>> edge_keys;
  for (std::size_t i = 0; i < in.edges.size(); ++i) {
    const auto& [a, b, len] = in.edges[i];
    auto ia = seen.find(a);
    auto ib = seen.find(b);
    if (ia == seen.end()) {
      throw ValidationError(in.edge_at(i) + ": unknown node '" + a + "'");
    }
    if (ib == seen.end()) {
      throw ValidationError(in.edge_at(i) + ": unknown node '" + b + "'");
    }
    if (ia->second == ib->second) {
      throw ValidationError(in.edge_at(i) + ": self-loop on '" + a + "'");
    }
    if (!std::isfinite(len) || len <= 0.0) {
      throw ValidationError(in.edge_at(i) + ": edge ('" + a + "','" + b +
                            "') length must be a finite positive number");
    }
    auto key = std::minmax(ia->second, ib->second);
    if (!edge_keys.insert(key).second) {
      throw ValidationError(in.edge_at(i) + ": duplicate edge ('" + a + "','" +
                            b + "')");
    }
  }
}

Located parse_json_input(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("json: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("nodes") || !doc.contains("edges")) {
    throw ValidationError("json: top level must be an object with 'nodes' and 'edges'");
  }
  const auto& nodes = doc["nodes"];
  const auto& edges = doc["edges"];
  if (!nodes.is_array()) throw ValidationError("json: 'nodes' must be an array");
  if (!edges.is_array()) throw ValidationError("json: 'edges' must be an array");

  Located out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string where = "json: nodes[" + std::to_string(i) + "]";
    const auto& n = nodes[i];
    if (!n.is_object() || !n.contains("id") || !n["id"].is_string()) {
      throw ValidationError(where + ": needs a string 'id'");
    }
    if (!n.contains("features") || !n["features"].is_array()) {
      throw ValidationError(where + ": needs a 'features' array");
    }
    WeightedGraph::Node node;
    node.id = n["id"].get<std::string>();
    for (std::size_t f = 0; f < n["features"].size(); ++f) {
      if (!n["features"][f].is_number()) {
        throw ValidationError(where + ".features[" + std::to_string(f) +
                              "]: must be a number");
      }
      node.features.push_back(n["features"][f].get<double>());
    }
    out.nodes.push_back(std::move(node));
    out.node_where.push_back(where);
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "json: edges[" + std::to_string(i) + "]";
    const auto& e = edges[i];
    if (!e.is_object() || !e.contains("a") || !e.contains("b") ||
        !e.contains("len") || !e["a"].is_string() || !e["b"].is_string() ||
        !e["len"].is_number()) {
      throw ValidationError(where +
                            ": needs string 'a', string 'b' and numeric 'len'");
    }
    out.edges.emplace_back(e["a"].get<std::string>(), e["b"].get<std::string>(),
                           e["len"].get<double>());
    out.edge_where.push_back(where);
  }
  return out;
}

double parse_number(std::string_view token, const std::string& where) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ValidationError(where + ": '" + std::string(token) + "' is not a number");
  }
  return value;
}

Located parse_tsv_input(std::string_view text) {
  Located out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
      if (i > start) fields.push_back(line.substr(start, i - start));
    }
    if (fields.empty()) continue;
    const std::string where = "tsv line " + std::to_string(line_no);
    if (fields[0] == "N") {
      if (fields.size() < 2) {
        throw ValidationError(where + ": node record needs an id");
      }
      WeightedGraph::Node node;
      node.id = std::string(fields[1]);
      for (std::size_t f = 2; f < fields.size(); ++f) {
        node.features.push_back(parse_number(fields[f], where));
      }
      out.nodes.push_back(std::move(node));
      out.node_where.push_back(where);
    } else if (fields[0] == "E") {
      if (fields.size() != 4) {
        throw ValidationError(where + ": edge record needs exactly '<a> <b> <len>'");
      }
      out.edges.emplace_back(std::string(fields[1]), std::string(fields[2]),
                             parse_number(fields[3], where));
      out.edge_where.push_back(where);
    } else {
      throw ValidationError(where + ": unknown record type '" +
                            std::string(fields[0]) + "' (expected N or E)");
    }
  }
  return out;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

WeightedGraph::WeightedGraph(std::vector<Node> nodes, std::vector<EdgeDecl> edges) {
  Located in;
  in.nodes = std::move(nodes);
  in.edges = std::move(edges);
  validate_declarations(in);

  nodes_ = std::move(in.nodes);
  feature_dim_ = nodes_.empty() ? 0 : nodes_.front().features.size();
  for (std::size_t i = 0; i < nodes_.size(); ++i) index_[nodes_[i].id] = i;
  adjacency_.resize(nodes_.size());
  edges_.reserve(in.edges.size());
  for (const auto& [a, b, len] : in.edges) {
    const std::size_t ia = index_.at(a);
    const std::size_t ib = index_.at(b);
    edges_.push_back({std::min(ia, ib), std::max(ia, ib), len});
    adjacency_[ia].emplace_back(ib, len);
    adjacency_[ib].emplace_back(ia, len);
  }
}

std::optional<std::size_t> WeightedGraph::node_index(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

WeightedGraph parse_graph(std::string_view text, GraphFormat format) {
  Located in = format == GraphFormat::json ? parse_json_input(text)
                                           : parse_tsv_input(text);
  validate_declarations(in);
  return WeightedGraph(std::move(in.nodes), std::move(in.edges));
}

WeightedGraph parse_graph(std::istream& in, GraphFormat format) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(std::string_view(buffer.view()), format);
}

WeightedGraph load_graph(const std::string& path, std::optional<GraphFormat> format) {
  if (!format) {
    if (path.ends_with(".json")) {
      format = GraphFormat::json;
    } else if (path.ends_with(".tsv") || path.ends_with(".txt")) {
      format = GraphFormat::tsv;
    } else {
      throw ValidationError("cannot infer graph format from '" + path +
                            "' (expected .json or .tsv; or pass --format)");
    }
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  return parse_graph(in, *format);
}

std::string emit_graph(const WeightedGraph& g, GraphFormat format) {
  if (format == GraphFormat::json) {
    nlohmann::ordered_json doc;
    doc["nodes"] = nlohmann::ordered_json::array();
    doc["edges"] = nlohmann::ordered_json::array();
    for (const auto& node : g.nodes()) {
      doc["nodes"].push_back({{"id", node.id}, {"features", node.features}});
    }
    for (const auto& edge : g.edges()) {
      doc["edges"].push_back({{"a", g.nodes()[edge.a].id},
                              {"b", g.nodes()[edge.b].id},
                              {"len", edge.length}});
    }
    return doc.dump(2) + "\n";
  }
  std::string out;
  for (const auto& node : g.nodes()) {
    out += "N\t" + node.id;
    for (double f : node.features) out += "\t" + format_double(f);
    out += "\n";
  }
  for (const auto& edge : g.edges()) {
    out += "E\t" + g.nodes()[edge.a].id + "\t" + g.nodes()[edge.b].id + "\t" +
           format_double(edge.length) + "\n";
  }
  return out;
}

std::vector<std::size_t> ShortestPaths::unreachable() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < reached.size(); ++i) {
    if (!reached[i]) out.push_back(i);
  }
  return out;
}

ShortestPaths shortest_paths_from(const WeightedGraph& g, std::string_view origin_id) {
  const auto origin = g.node_index(origin_id);
  if (!origin) {
    throw ValidationError("origin '" + std::string(origin_id) +
                          "' is not a node of the graph");
  }
  const std::size_t n = g.node_count();
  ShortestPaths result;
  result.distance.assign(n, 0.0);
  result.reached.assign(n, false);

  using Entry = std::pair<double, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  std::vector<double> best(n, std::numeric_limits<double>::infinity());
  best[*origin] = 0.0;
  queue.emplace(0.0, *origin);
  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (result.reached[u]) continue;
    result.reached[u] = true;
    result.distance[u] = d;
    for (const auto& [v, len] : g.neighbors(u)) {
      if (!result.reached[v] && d + len < best[v]) {
        best[v] = d + len;
        queue.emplace(best[v], v);
      }
    }
  }
  return result;
}

RadialProfile rooted_profile(const WeightedGraph& g, std::string_view origin_id,
                             std::size_t feature_index,
                             const ProfileOptions& options) {
  if (feature_index >= g.feature_dim()) {
    throw ValidationError("feature index " + std::to_string(feature_index) +
                          " out of range (graph has " +
                          std::to_string(g.feature_dim()) + " features)");
  }
  const ShortestPaths paths = shortest_paths_from(g, origin_id);
  if (!options.restrict_reachable) {
    const auto missing = paths.unreachable();
    if (!missing.empty()) {
      std::string names;
      for (std::size_t i : missing) {
        if (!names.empty()) names += ", ";
        names += "'" + g.nodes()[i].id + "'";
      }
      throw ValidationError("graph is disconnected from origin '" +
                            std::string(origin_id) + "': unreachable " + names +
                            " (pass --restrict-reachable to drop them)");
    }
  }
  std::vector<Atom> atoms;
  atoms.reserve(g.node_count());
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    if (!paths.reached[i]) continue;
    atoms.push_back({paths.distance[i], g.nodes()[i].features[feature_index]});
  }
  RadialProfile profile(std::string(origin_id), std::move(atoms));
  if (options.quantize_decimals) {
    return quantize_radii(profile, *options.quantize_decimals);
  }
  return profile;
}

}  // namespace rdd
