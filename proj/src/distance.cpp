#include "rdd/distance.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <utility>

#include "parallel.hpp"
#include "rdd/summation.hpp"
#include "rdd/validation.hpp"

namespace rdd {

namespace {

void require_lambda(double lambda) {
  if (!std::isfinite(lambda) || lambda <= 0.0) {
    throw ValidationError("decay rate lambda must be a finite positive number");
  }
}

// Walks the merged breakpoint set of f1 and f2. At each merged radius r the
// callback sees r, the weight e^(-lambda r), and the difference |m1 - m2|
// valid on [r, next). Returns the number of merged radii.
template <class Visit>
void merged_walk(const StepFunction& f1, const StepFunction& f2, double lambda,
                 Visit&& visit) {
  const auto b1 = f1.breakpoints();
  const auto v1 = f1.values();
  const auto b2 = f2.breakpoints();
  const auto v2 = f2.values();
  std::size_t i = 0, j = 0;
  double m1 = 0.0, m2 = 0.0;
  while (i < b1.size() || j < b2.size()) {
    double r;
    if (j == b2.size() || (i < b1.size() && b1[i] <= b2[j])) {
      r = b1[i];
    } else {
      r = b2[j];
    }
    if (i < b1.size() && b1[i] == r) m1 = v1[i++];
    if (j < b2.size() && b2[j] == r) m2 = v2[j++];
    visit(r, std::exp(-lambda * r), std::fabs(m1 - m2));
  }
}

constexpr double kInf = std::numeric_limits<double>::infinity();

// Closed-form integral mode. sink(r_lo, r_hi, addend) observes every
// interval including the tail.
template <class Sink>
double exact_value(const StepFunction& f1, const StepFunction& f2, double lambda,
                   Sink&& sink) {
  CompensatedSum total;
  bool have_prev = false;
  double prev_r = 0.0, prev_w = 0.0, prev_delta = 0.0;
  merged_walk(f1, f2, lambda, [&](double r, double w, double delta) {
    if (have_prev) {
      const double addend = prev_delta * (prev_w - w) / lambda;
      total.add(addend);
      sink(prev_r, r, addend);
    }
    prev_r = r;
    prev_w = w;
    prev_delta = delta;
    have_prev = true;
  });
  const double tail = prev_delta * prev_w / lambda;
  total.add(tail);
  sink(prev_r, kInf, tail);
  return total.value();
}

// Discrete-sum mode: one addend per merged breakpoint.
template <class Sink>
double discrete_value(const StepFunction& f1, const StepFunction& f2,
                      double lambda, Sink&& sink) {
  CompensatedSum total;
  merged_walk(f1, f2, lambda, [&](double r, double w, double delta) {
    const double addend = w * delta;
    total.add(addend);
    sink(r, r, addend);
  });
  return total.value();
}

struct DiscardSink {
  void operator()(double, double, double) const {}
};

std::vector<StepFunction> graph_distributions(const WeightedGraph& g,
                                              std::size_t feature_index,
                                              const ProfileOptions& options) {
  std::vector<StepFunction> out(g.node_count(), StepFunction::zero());
  std::exception_ptr failure;
  std::mutex failure_mutex;
  detail::parallel_for(g.node_count(), [&](std::size_t i) {
    try {
      out[i] = cumulative_distribution(
          rooted_profile(g, g.nodes()[i].id, feature_index, options));
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  });
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace

DistanceResult d_rd_exact(const StepFunction& f1, const StepFunction& f2,
                          double lambda) {
  require_lambda(lambda);
  DistanceResult result;
  result.mode = Mode::exact_integral;
  result.lambda = lambda;
  result.value = exact_value(f1, f2, lambda, [&](double lo, double hi, double a) {
    result.contributions.push_back({lo, hi, a});
  });
  return result;
}

DistanceResult d_rd_discrete(const StepFunction& f1, const StepFunction& f2,
                             double lambda) {
  require_lambda(lambda);
  DistanceResult result;
  result.mode = Mode::paper_discrete;
  result.lambda = lambda;
  result.value = discrete_value(f1, f2, lambda, [&](double lo, double hi, double a) {
    result.contributions.push_back({lo, hi, a});
  });
  return result;
}

DistanceResult d_rd(const StepFunction& f1, const StepFunction& f2, Mode mode,
                    double lambda) {
  return mode == Mode::exact_integral ? d_rd_exact(f1, f2, lambda)
                                      : d_rd_discrete(f1, f2, lambda);
}

double d_rd_value(const StepFunction& f1, const StepFunction& f2, Mode mode,
                  double lambda) {
  require_lambda(lambda);
  return mode == Mode::exact_integral
             ? exact_value(f1, f2, lambda, DiscardSink{})
             : discrete_value(f1, f2, lambda, DiscardSink{});
}

MultiDistanceResult d_rd_multi(std::span<const StepFunction> f1,
                               std::span<const StepFunction> f2, Norm norm,
                               Mode mode, double lambda) {
  if (f1.size() != f2.size()) {
    throw ValidationError("multi-feature distance: " + std::to_string(f1.size()) +
                          " features vs " + std::to_string(f2.size()));
  }
  if (f1.empty()) {
    throw ValidationError("multi-feature distance: needs at least one feature");
  }
  MultiDistanceResult result;
  result.mode = mode;
  result.norm = norm;
  result.lambda = lambda;
  result.per_feature.reserve(f1.size());
  for (std::size_t i = 0; i < f1.size(); ++i) {
    result.per_feature.push_back(d_rd_value(f1[i], f2[i], mode, lambda));
  }
  switch (norm) {
    case Norm::sum: {
      CompensatedSum total;
      for (double v : result.per_feature) total.add(v);
      result.value = total.value();
      break;
    }
    case Norm::euclidean: {
      // Zero components are skipped so a single live feature passes through
      // unchanged (sqrt(x*x) may differ from x in the last ulp).
      CompensatedSum squares;
      std::size_t live = 0;
      double last = 0.0;
      for (double v : result.per_feature) {
        if (v != 0.0) {
          squares.add(v * v);
          ++live;
          last = v;
        }
      }
      result.value = live <= 1 ? last : std::sqrt(squares.value());
      break;
    }
    case Norm::max:
      result.value = *std::max_element(result.per_feature.begin(),
                                       result.per_feature.end());
      break;
  }
  return result;
}

DistanceMatrix all_pairs(const WeightedGraph& ga, const WeightedGraph& gb,
                         std::size_t feature_index, Mode mode, double lambda,
                         const ProfileOptions& options) {
  require_lambda(lambda);
  const auto fa = graph_distributions(ga, feature_index, options);
  const auto fb = graph_distributions(gb, feature_index, options);

  DistanceMatrix matrix;
  for (const auto& node : ga.nodes()) matrix.row_ids.push_back(node.id);
  for (const auto& node : gb.nodes()) matrix.col_ids.push_back(node.id);
  matrix.values.assign(fa.size() * fb.size(), 0.0);
  detail::parallel_for(fa.size(), [&](std::size_t i) {
    for (std::size_t j = 0; j < fb.size(); ++j) {
      matrix.values[i * fb.size() + j] = d_rd_value(fa[i], fb[j], mode, lambda);
    }
  });
  return matrix;
}

std::vector<RankedNode> top_k(const WeightedGraph& ga, std::string_view origin_a,
                              const WeightedGraph& gb, std::size_t k,
                              std::size_t feature_index, Mode mode,
                              double lambda, const ProfileOptions& options) {
  require_lambda(lambda);
  if (k < 1) throw ValidationError("top-k: k must be >= 1");
  const StepFunction fa =
      cumulative_distribution(rooted_profile(ga, origin_a, feature_index, options));
  const auto fb = graph_distributions(gb, feature_index, options);

  std::vector<RankedNode> ranked(fb.size());
  detail::parallel_for(fb.size(), [&](std::size_t j) {
    ranked[j] = {gb.nodes()[j].id, d_rd_value(fa, fb[j], mode, lambda)};
  });
  std::sort(ranked.begin(), ranked.end(), [](const RankedNode& x, const RankedNode& y) {
    return x.value != y.value ? x.value < y.value : x.node_id < y.node_id;
  });
  if (ranked.size() > k) ranked.resize(k);
  return ranked;
}

}  // namespace rdd
