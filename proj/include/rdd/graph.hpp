#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rdd/radial_profile.hpp"

namespace rdd {

enum class GraphFormat { json, tsv };

// Undirected graph with strictly positive edge lengths and a k-dimensional
// nonnegative feature vector per node. Feature i of a node is the node's
// point mass under measure i; distances are shortest paths.
class WeightedGraph {
 public:
  struct Node {
    std::string id;
    std::vector<double> features;
  };
  struct Edge {
    std::size_t a, b;  // node indices, a < b
    double length;
  };

  // Edges reference nodes by id. Rejects duplicate ids, unknown endpoints,
  // self-loops, duplicate edges (either orientation), non-positive or
  // non-finite lengths, negative features, inconsistent feature dimensions.
  WeightedGraph(std::vector<Node> nodes,
                std::vector<std::tuple<std::string, std::string, double>> edges);

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t feature_dim() const { return feature_dim_; }
  std::span<const Node> nodes() const { return nodes_; }
  std::span<const Edge> edges() const { return edges_; }
  std::optional<std::size_t> node_index(std::string_view id) const;
  std::span<const std::pair<std::size_t, double>> neighbors(std::size_t node) const {
    return adjacency_[node];
  }

 private:
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<std::size_t, double>>> adjacency_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t feature_dim_ = 0;
};

// Parsing reports every defect with its location (tsv line / json path).
WeightedGraph parse_graph(std::istream& in, GraphFormat format);
WeightedGraph parse_graph(std::string_view text, GraphFormat format);

// Reads a graph file; the format comes from the extension (.json, .tsv)
// unless given explicitly.
WeightedGraph load_graph(const std::string& path,
                         std::optional<GraphFormat> format = {});

// Serialization; parse(emit(g)) is semantically identical to g.
std::string emit_graph(const WeightedGraph& g, GraphFormat format);

// Single-source shortest paths, indexed like g.nodes(). Unreachable nodes are
// flagged, never assigned a fake distance.
struct ShortestPaths {
  std::vector<double> distance;
  std::vector<bool> reached;
  std::vector<std::size_t> unreachable() const;
};

ShortestPaths shortest_paths_from(const WeightedGraph& g, std::string_view origin_id);

struct ProfileOptions {
  // Default policy for nodes the origin cannot reach is a hard error naming
  // them; this opts into silently restricting the space to the origin's
  // component instead.
  bool restrict_reachable = false;
  // Round shortest-path distances to this many decimals before merging.
  std::optional<int> quantize_decimals{};
};

// The rooted space (g, origin) reduced to radial form under the chosen
// feature: atoms {(d(origin, x), features[x][feature_index])}.
RadialProfile rooted_profile(const WeightedGraph& g, std::string_view origin_id,
                             std::size_t feature_index,
                             const ProfileOptions& options = {});

}  // namespace rdd
