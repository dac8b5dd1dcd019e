#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "rdd/metric_space.hpp"
#include "rdd/radial_profile.hpp"
#include "rdd/step_function.hpp"

namespace rdd {

// Numerical evaluation of the weighted L1 distance on a grid: uniform nodes
// of the given step over [0, r_max] with both breakpoint sets inserted as
// extra nodes. Between grid nodes |m1 - m2| is constant, so each cell
// integrates the e^(-lambda r) weight in closed form; the tail beyond r_max
// is |total1 - total2| e^(-lambda r_max) / lambda, added analytically.
// Independent of the merged-interval walk in d_rd_exact: the functions are
// sampled pointwise through evaluate() at every grid node.
double quadrature_d_rd(const StepFunction& f1, const StepFunction& f2,
                       double step, double lambda = 1.0);

// Hausdorff distance between two non-empty point subsets: the larger of the
// two directed max-min distances.
double hausdorff(const FiniteMetricSpace& space,
                 std::span<const std::size_t> s1,
                 std::span<const std::size_t> s2);

// Levy-Prokhorov distance between two mass vectors on the space, by bisection
// over the radius. Feasibility of a radius is checked exhaustively over all
// non-empty subsets, with open neighborhoods N_r(S) = {y : exists x in S with
// d(x, y) < r}; the infimum is bracketed from above and the midpoint of the
// final bracket is returned, so the result is within tol of the infimum.
// The subset enumeration caps n at 20.
double levy_prokhorov(const FiniteMetricSpace& space,
                      std::span<const double> mu1, std::span<const double> mu2,
                      double tol);

struct SamplerConfig {
  std::size_t max_atoms = 8;
  double max_radius = 10.0;
  double max_mass = 5.0;
};

// Seedable random profile source backing the property suites. Every profile
// carries its origin atom at radius 0.
class ProfileSampler {
 public:
  explicit ProfileSampler(std::uint64_t seed, SamplerConfig config = {});
  RadialProfile next();

 private:
  std::mt19937_64 rng_;
  SamplerConfig config_;
  std::uint64_t count_ = 0;
};

struct PseudometricReport {
  std::uint64_t trials = 0;
  struct Violation {
    std::string axiom;   // "self-distance" | "symmetry" | "triangle"
    std::string detail;  // offending inputs, for minimization
    double excess = 0.0;
  };
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Axiom checks for one triple of cumulative distributions at the given
// absolute slack.
std::vector<PseudometricReport::Violation> check_pseudometric_triple(
    const StepFunction& f1, const StepFunction& f2, const StepFunction& f3,
    double slack = 1e-9);

// Runs symmetry, zero-self-distance and triangle-inequality checks for the
// exact distance on sampled triples; slack 1e-9 absolute.
PseudometricReport check_pseudometric(ProfileSampler& sampler,
                                      std::uint64_t trials);

}  // namespace rdd
