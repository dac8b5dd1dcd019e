// Acceptance suite: every release criterion as one pass/fail line, with the
// measured numbers inline. Exit code is the number of failed criteria.
// Build in Release; the timing criteria assume an optimized build.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rdd/distance.hpp"
#include "rdd/graph.hpp"
#include "rdd/metric_space.hpp"
#include "rdd/oracle.hpp"
#include "rdd/sample_graphs.hpp"
#include "rdd/step_function.hpp"
#include "support/test_oracles.hpp"

using namespace rdd;

namespace {

volatile double g_sink = 0.0;  // keeps timed work alive

double time_ms_best_of(int repeats, const std::function<void()>& work) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    work();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best,
                    std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

StepFunction distribution_of(const WeightedGraph& g, const char* origin) {
  return cumulative_distribution(rooted_profile(g, origin, 0));
}

RadialProfile synthetic_profile(std::mt19937_64& rng, std::size_t atoms) {
  std::uniform_real_distribution<double> radius(0.0, 20.0);
  std::uniform_real_distribution<double> mass(0.0, 10.0);
  std::vector<Atom> list;
  list.reserve(atoms);
  list.push_back({0.0, mass(rng)});
  for (std::size_t i = 1; i < atoms; ++i) list.push_back({radius(rng), mass(rng)});
  return RadialProfile("bench", std::move(list));
}

bool criterion_discrete_value(std::string& detail) {
  const WeightedGraph a = sample_graph_a();
  const WeightedGraph b = sample_graph_b();
  double value = 0.0;
  const double ms = time_ms_best_of(3, [&] {
    value = d_rd_value(distribution_of(a, "v1"), distribution_of(b, "u1"),
                       Mode::paper_discrete);
    g_sink = value;
  });
  const double frozen = std::exp(-3.0);
  detail = fmt("d = %.12g, |d - e^-3| = %.3g, %.3g ms", value,
               std::fabs(value - frozen), ms);
  return std::fabs(value - frozen) <= 1e-12 && ms < 10.0;
}

bool criterion_ranking(std::string& detail) {
  const WeightedGraph a = sample_graph_a();
  const WeightedGraph b = sample_graph_b();
  const auto ranked = top_k(a, "v1", b, 6, 0, Mode::paper_discrete);
  if (ranked.size() != 6) {
    detail = "expected 6 ranked nodes";
    return false;
  }
  const std::set<std::string> closest{ranked[0].node_id, ranked[1].node_id};
  const std::set<std::string> farthest{ranked[4].node_id, ranked[5].node_id};
  bool ok = closest == std::set<std::string>{"u1", "u6"} &&
            farthest == std::set<std::string>{"u3", "u4"};
  const double near_want = std::exp(-3.0);
  const double far_want = 1.0 + 2.0 * std::exp(-1.0) + 2.0 * std::exp(-2.0);
  for (int i : {0, 1}) ok = ok && std::fabs(ranked[i].value - near_want) <= 1e-9;
  for (int i : {4, 5}) ok = ok && std::fabs(ranked[i].value - far_want) <= 1e-9;
  detail = fmt("closest %.9g (u1,u6), farthest %.9g (u3,u4)", ranked[0].value,
               ranked[5].value);
  return ok;
}

bool criterion_strictness(std::string& detail) {
  const auto f1 = cumulative_distribution(
      RadialProfile("a", {{0, 1}, {1, 1}, {1, 1}}));
  const auto f2 = cumulative_distribution(
      RadialProfile("a", {{0, 1}, {1, 0.5}, {1, 1.5}}));
  const double exact = d_rd_value(f1, f2, Mode::exact_integral);
  const double discrete = d_rd_value(f1, f2, Mode::paper_discrete);
  const FiniteMetricSpace space(3, {0, 1, 1, 1, 0, 1, 1, 1, 0});
  const std::vector<double> mu1{1, 1, 1}, mu2{1, 0.5, 1.5};
  const double lp = levy_prokhorov(space, mu1, mu2, 1e-6);
  detail = fmt("d_rd exact %g, discrete %g, prokhorov %.6f", exact, discrete, lp);
  return exact == 0.0 && discrete == 0.0 && lp > 0.01;
}

bool criterion_cumulative(std::string& detail) {
  const StepFunction m1 = distribution_of(sample_graph_a(), "v1");
  const StepFunction m2 = distribution_of(sample_graph_b(), "u1");
  const double want1[] = {1, 2, 6, 8, 8};
  const double want2[] = {1, 2, 6, 7, 8};
  bool ok = true;
  for (int r = 0; r <= 4; ++r) {
    ok = ok && m1.evaluate(r) == want1[r] && m2.evaluate(r) == want2[r];
  }
  detail = fmt("m1(0..4) ends at %g, m2(3) = %g", m1.evaluate(4), m2.evaluate(3));
  return ok;
}

bool criterion_oracle_equivalence(std::string& detail) {
  ProfileSampler sampler(20250809, {32, 20.0, 10.0});
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  const int pairs = 500;
  for (int p = 0; p < pairs; ++p) {
    const StepFunction f1 = cumulative_distribution(sampler.next());
    const StepFunction f2 = cumulative_distribution(sampler.next());
    const double exact = d_rd_value(f1, f2, Mode::exact_integral);
    const double quad = quadrature_d_rd(f1, f2, 1e-4);
    worst = std::max(worst, std::fabs(exact - quad));
  }
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
  detail = fmt("%.0f pairs, max |exact - quadrature| = %.3g, %.1f s",
               double(pairs), worst, seconds);
  return worst <= 1e-9 && seconds < 30.0;
}

bool criterion_pseudometric(std::string& detail) {
  ProfileSampler sampler(42);
  const PseudometricReport report = check_pseudometric(sampler, 1000);
  detail = fmt("%g trials, %g violations", double(report.trials),
               double(report.violations.size()));
  return report.ok();
}

bool criterion_scaling(std::string& detail) {
  std::mt19937_64 rng(7);
  const std::size_t sizes[] = {10'000, 100'000, 1'000'000};
  // Each measurement streams a pool of pairs comparable to a batch workload;
  // pools are sized so every scale works from memory rather than rewarding
  // the smallest one for fitting in cache, and the per-pair time is the best
  // batch average observed.
  const int batch[] = {32, 6, 1};
  const int repeats[] = {5, 4, 3};
  double ms[3] = {0, 0, 0};
  for (int s = 0; s < 3; ++s) {
    std::vector<RadialProfile> pool;
    for (int b = 0; b < 2 * batch[s]; ++b) {
      pool.push_back(synthetic_profile(rng, sizes[s]));
    }
    ms[s] = time_ms_best_of(repeats[s], [&] {
              for (int b = 0; b < batch[s]; ++b) {
                g_sink = d_rd_value(cumulative_distribution(pool[2 * b]),
                                    cumulative_distribution(pool[2 * b + 1]),
                                    Mode::exact_integral);
              }
            }) /
            batch[s];
  }
  const double r1 = ms[1] / ms[0];
  const double r2 = ms[2] / ms[1];
  detail = fmt("10^4/5/6 atoms: %.2f / %.1f", ms[0], ms[1]) +
           fmt(" / %.0f ms per pair; ratios %.1f, %.1f", ms[2], r1, r2);
  return r1 <= 15.0 && r2 <= 15.0 && ms[2] < 2000.0;
}

bool criterion_shortest_paths(std::string& detail) {
  std::mt19937_64 rng(20250810);
  int graphs = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const WeightedGraph g = testing::random_connected_graph(rng, 10);
    const auto full = testing::floyd_warshall(g);
    const std::size_t n = g.node_count();
    for (std::size_t origin = 0; origin < n; ++origin) {
      const auto sp = shortest_paths_from(g, g.nodes()[origin].id);
      for (std::size_t j = 0; j < n; ++j) {
        if (!sp.reached[j] || sp.distance[j] != full[origin * n + j]) {
          detail = fmt("mismatch in graph %g at origin %g", double(trial),
                       double(origin));
          return false;
        }
      }
    }
    ++graphs;
  }
  detail = fmt("%g random connected graphs, all single-source rows exact",
               double(graphs));
  return true;
}

bool criterion_multi_feature(std::string& detail) {
  const auto three = cumulative_distribution(RadialProfile("o", {{0, 3}}));
  const auto four = cumulative_distribution(RadialProfile("o", {{0, 4}}));
  const std::vector<StepFunction> a{three, four};
  const std::vector<StepFunction> b{StepFunction::zero(), StepFunction::zero()};
  bool ok = d_rd_multi(a, b, Norm::sum).value == 7.0 &&
            d_rd_multi(a, b, Norm::euclidean).value == 5.0 &&
            d_rd_multi(a, b, Norm::max).value == 4.0;

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100 && ok; ++trial) {
    const WeightedGraph g = testing::random_connected_graph(rng, 8);
    const WeightedGraph h = testing::random_connected_graph(rng, 8);
    const StepFunction f1 = distribution_of(g, g.nodes()[0].id.c_str());
    const StepFunction f2 = distribution_of(h, h.nodes()[0].id.c_str());
    const double single = d_rd_value(f1, f2, Mode::exact_integral);
    const std::vector<StepFunction> a2{f1, StepFunction::zero()};
    const std::vector<StepFunction> b2{f2, StepFunction::zero()};
    for (Norm norm : {Norm::sum, Norm::euclidean, Norm::max}) {
      ok = ok && d_rd_multi(a2, b2, norm).value == single;
    }
  }
  detail = "sum/euclidean/max = 7/5/4; zero second feature is exact";
  return ok;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"discrete distance on the bundled pair equals e^-3", criterion_discrete_value},
      {"ranking from v1: u1,u6 closest, u3,u4 farthest", criterion_ranking},
      {"zero radial distance with positive Prokhorov gap", criterion_strictness},
      {"cumulative distributions on the merged radius set", criterion_cumulative},
      {"closed form vs quadrature on 500 random pairs", criterion_oracle_equivalence},
      {"pseudometric axioms on 1000 random triples", criterion_pseudometric},
      {"quasilinear scaling of the per-pair distance", criterion_scaling},
      {"single-source distances vs cubic brute force", criterion_shortest_paths},
      {"multi-feature norms combine exactly", criterion_multi_feature},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::printf("%s  %zu. %s (%s)\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].name.c_str(), detail.c_str());
  }
  std::printf("acceptance: %zu of %zu criteria passed\n",
              criteria.size() - failures, criteria.size());
  return failures;
}
