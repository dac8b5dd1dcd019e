#pragma once

#include "rdd/graph.hpp"

namespace rdd {

// The two bundled 6-node unit-length graphs (data/sample_a.json and
// data/sample_b.json). Their pairwise distances are frozen as regression
// constants in the verification command and the test suites.
WeightedGraph sample_graph_a();
WeightedGraph sample_graph_b();

}  // namespace rdd
