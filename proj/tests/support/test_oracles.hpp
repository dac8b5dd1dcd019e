#pragma once

// Brute-force references and random generators used only by the test suites.
// Random edge lengths, masses and distances are dyadic (multiples of 1/8) so
// that sums computed in different orders by different algorithms are exact in
// binary floating point and "agree exactly" means exactly that.

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rdd/graph.hpp"
#include "rdd/metric_space.hpp"

namespace rdd::testing {

inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

// Cubic all-pairs relaxation; returns the row-major n*n distance matrix with
// kUnreachable for disconnected pairs.
inline std::vector<double> floyd_warshall(const WeightedGraph& g) {
  const std::size_t n = g.node_count();
  std::vector<double> d(n * n, kUnreachable);
  for (std::size_t i = 0; i < n; ++i) d[i * n + i] = 0.0;
  for (const auto& e : g.edges()) {
    d[e.a * n + e.b] = std::min(d[e.a * n + e.b], e.length);
    d[e.b * n + e.a] = d[e.a * n + e.b];
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (d[i * n + k] + d[k * n + j] < d[i * n + j]) {
          d[i * n + j] = d[i * n + k] + d[k * n + j];
        }
      }
    }
  }
  return d;
}

inline double dyadic(std::mt19937_64& rng, int lo_eighths, int hi_eighths) {
  std::uniform_int_distribution<int> dist(lo_eighths, hi_eighths);
  return dist(rng) / 8.0;
}

// Connected graph: random spanning tree plus a few extra edges, dyadic
// lengths in [1/4, 4], one or two features with dyadic masses in [0, 5].
inline WeightedGraph random_connected_graph(std::mt19937_64& rng,
                                            std::size_t max_nodes,
                                            std::size_t features = 1) {
  std::uniform_int_distribution<std::size_t> node_count(1, max_nodes);
  const std::size_t n = node_count(rng);

  std::vector<WeightedGraph::Node> nodes;
  for (std::size_t i = 0; i < n; ++i) {
    WeightedGraph::Node node;
    node.id = "n" + std::to_string(i);
    for (std::size_t f = 0; f < features; ++f) {
      node.features.push_back(dyadic(rng, 0, 40));
    }
    nodes.push_back(std::move(node));
  }

  std::vector<std::tuple<std::string, std::string, double>> edges;
  std::set<std::pair<std::size_t, std::size_t>> used;
  auto add_edge = [&](std::size_t a, std::size_t b) {
    auto key = std::minmax(a, b);
    if (a == b || !used.insert(key).second) return;
    edges.emplace_back("n" + std::to_string(a), "n" + std::to_string(b),
                       dyadic(rng, 2, 32));
  };
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> parent(0, i - 1);
    add_edge(i, parent(rng));
  }
  if (n > 1) {
    std::uniform_int_distribution<std::size_t> any(0, n - 1);
    std::uniform_int_distribution<std::size_t> extra_count(0, n);
    const std::size_t extras = extra_count(rng);
    for (std::size_t e = 0; e < extras; ++e) add_edge(any(rng), any(rng));
  }
  return WeightedGraph(std::move(nodes), std::move(edges));
}

// Valid-by-construction metric space: shortest-path closure of a random
// complete graph with dyadic weights; measures are dyadic too.
inline FiniteMetricSpace random_metric_space(std::mt19937_64& rng,
                                             std::size_t max_points,
                                             std::size_t measure_count = 0) {
  std::uniform_int_distribution<std::size_t> point_count(2, max_points);
  const std::size_t n = point_count(rng);
  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      d[i * n + j] = d[j * n + i] = dyadic(rng, 2, 64);
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (d[i * n + k] + d[k * n + j] < d[i * n + j]) {
          d[i * n + j] = d[i * n + k] + d[k * n + j];
        }
      }
    }
  }
  std::vector<std::vector<double>> measures;
  for (std::size_t m = 0; m < measure_count; ++m) {
    std::vector<double> mu(n);
    for (double& mass : mu) mass = dyadic(rng, 0, 40);
    measures.push_back(std::move(mu));
  }
  return FiniteMetricSpace(n, std::move(d), std::move(measures));
}

}  // namespace rdd::testing
