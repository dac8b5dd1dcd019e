#include "rdd/sample_graphs.hpp"

namespace rdd {

WeightedGraph sample_graph_a() {
  return WeightedGraph(
      {{"v1", {1.0}},
       {"v2", {1.0}},
       {"v3", {2.0}},
       {"v4", {2.0}},
       {"v5", {1.0}},
       {"v6", {1.0}}},
      {{"v1", "v2", 1.0},
       {"v2", "v3", 1.0},
       {"v2", "v4", 1.0},
       {"v3", "v4", 1.0},
       {"v3", "v6", 1.0},
       {"v4", "v5", 1.0}});
}

WeightedGraph sample_graph_b() {
  return WeightedGraph(
      {{"u1", {1.0}},
       {"u2", {1.0}},
       {"u3", {2.0}},
       {"u4", {2.0}},
       {"u5", {1.0}},
       {"u6", {1.0}}},
      {{"u1", "u2", 1.0},
       {"u2", "u3", 1.0},
       {"u2", "u4", 1.0},
       {"u3", "u5", 1.0},
       {"u4", "u5", 1.0},
       {"u5", "u6", 1.0}});
}

}  // namespace rdd
