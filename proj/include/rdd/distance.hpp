#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "rdd/graph.hpp"
#include "rdd/step_function.hpp"

namespace rdd {

// The two documented variants of the radial distribution distance. They
// disagree numerically: on step functions the integral weights each
// difference by the weight mass of its interval, while the discrete sum
// weights it by the value of the weight at the breakpoint alone.
enum class Mode {
  exact_integral,  // integral of e^(-lambda r) |m1(r) - m2(r)| dr over [0, inf)
  paper_discrete,  // sum of e^(-lambda r) |m1(r) - m2(r)| over merged breakpoints
};

enum class Norm { sum, euclidean, max };

// One addend of a distance value. In exact_integral mode the addend covers
// [r_lo, r_hi) (r_hi is +inf for the tail term); in paper_discrete mode
// r_lo == r_hi is the breakpoint itself.
struct Contribution {
  double r_lo;
  double r_hi;
  double amount;
};

// A distance value plus the addends it is the sum of, for explainability.
// The compensated total of `contributions` equals `value` to 1e-12 relative.
struct DistanceResult {
  double value = 0.0;
  Mode mode = Mode::exact_integral;
  double lambda = 1.0;
  std::vector<Contribution> contributions;
};

// Combined distance over k measure components, one step function per
// component on each side.
struct MultiDistanceResult {
  double value = 0.0;
  Mode mode = Mode::exact_integral;
  Norm norm = Norm::sum;
  double lambda = 1.0;
  std::vector<double> per_feature;
};

// Exact closed-form evaluation of the weighted L1 distance between the two
// cumulative distributions: with merged radii r_0 < ... < r_m and
// D_i = |m1(r_i) - m2(r_i)| constant on [r_i, r_{i+1}),
//   value = sum_i D_i (e^(-l r_i) - e^(-l r_{i+1})) / l + D_m e^(-l r_m) / l.
// The tail is never truncated. lambda (l) defaults to 1; other decay rates
// are an extension knob.
DistanceResult d_rd_exact(const StepFunction& f1, const StepFunction& f2,
                          double lambda = 1.0);

// Discrete-sum variant over the merged breakpoint set only:
//   value = sum_{r in R} e^(-l r) |m1(r) - m2(r)|.
DistanceResult d_rd_discrete(const StepFunction& f1, const StepFunction& f2,
                             double lambda = 1.0);

DistanceResult d_rd(const StepFunction& f1, const StepFunction& f2, Mode mode,
                    double lambda = 1.0);

// Value-only evaluation; no provenance, no allocations. Used by the batch
// operations and benchmarks.
double d_rd_value(const StepFunction& f1, const StepFunction& f2, Mode mode,
                  double lambda = 1.0);

// Per-feature distances combined under the chosen norm. Feature counts must
// match; `sum` is the default.
MultiDistanceResult d_rd_multi(std::span<const StepFunction> f1,
                               std::span<const StepFunction> f2,
                               Norm norm = Norm::sum,
                               Mode mode = Mode::exact_integral,
                               double lambda = 1.0);

// All-pairs distance matrix between two graphs; entry (i, j) is the distance
// between (ga rooted at node i) and (gb rooted at node j), nodes in parse
// order. Rows may be evaluated in parallel; every entry is computed in
// isolation, so the result does not depend on the schedule.
struct DistanceMatrix {
  std::vector<std::string> row_ids;
  std::vector<std::string> col_ids;
  std::vector<double> values;  // row-major
  double at(std::size_t i, std::size_t j) const {
    return values[i * col_ids.size() + j];
  }
};

DistanceMatrix all_pairs(const WeightedGraph& ga, const WeightedGraph& gb,
                         std::size_t feature_index, Mode mode,
                         double lambda = 1.0, const ProfileOptions& options = {});

// The k nodes of gb whose rooted spaces are closest to (ga, origin_a),
// ascending by value, ties broken by node id. k beyond |gb| returns all.
struct RankedNode {
  std::string node_id;
  double value;
};

std::vector<RankedNode> top_k(const WeightedGraph& ga, std::string_view origin_a,
                              const WeightedGraph& gb, std::size_t k,
                              std::size_t feature_index, Mode mode,
                              double lambda = 1.0,
                              const ProfileOptions& options = {});

}  // namespace rdd
