#include "rdd/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <utility>

#include "rdd/distance.hpp"
#include "rdd/summation.hpp"
#include "rdd/validation.hpp"

namespace rdd {

double quadrature_d_rd(const StepFunction& f1, const StepFunction& f2,
                       double step, double lambda) {
  if (!std::isfinite(step) || step <= 0.0) {
    throw ValidationError("quadrature: step must be a finite positive number");
  }
  if (!std::isfinite(lambda) || lambda <= 0.0) {
    throw ValidationError("quadrature: lambda must be a finite positive number");
  }
  const double r_max = std::max(f1.breakpoints().back(), f2.breakpoints().back());

  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(r_max / step) + f1.breakpoints().size() +
               f2.breakpoints().size() + 2);
  for (std::size_t k = 0; k * step < r_max; ++k) grid.push_back(k * step);
  grid.push_back(r_max);
  grid.insert(grid.end(), f1.breakpoints().begin(), f1.breakpoints().end());
  grid.insert(grid.end(), f2.breakpoints().begin(), f2.breakpoints().end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  // |m1 - m2| is constant on each cell (every jump is a grid node), so the
  // weight integrates in closed form cell by cell.
  CompensatedSum total;
  double w_lo = std::exp(-lambda * grid.front());
  for (std::size_t c = 0; c + 1 < grid.size(); ++c) {
    const double delta = std::fabs(f1.evaluate(grid[c]) - f2.evaluate(grid[c]));
    const double w_hi = std::exp(-lambda * grid[c + 1]);
    total.add(delta * (w_lo - w_hi) / lambda);
    w_lo = w_hi;
  }
  const double tail = std::fabs(f1.total_mass() - f2.total_mass());
  total.add(tail * std::exp(-lambda * r_max) / lambda);
  return total.value();
}

namespace {

double directed_hausdorff(const FiniteMetricSpace& space,
                          std::span<const std::size_t> from,
                          std::span<const std::size_t> to) {
  double worst = 0.0;
  for (std::size_t x : from) {
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t y : to) nearest = std::min(nearest, space.distance(x, y));
    worst = std::max(worst, nearest);
  }
  return worst;
}

void require_subset(const FiniteMetricSpace& space,
                    std::span<const std::size_t> subset, const char* name) {
  if (subset.empty()) {
    throw ValidationError(std::string("hausdorff: ") + name + " is empty");
  }
  for (std::size_t i : subset) {
    if (i >= space.size()) {
      throw ValidationError(std::string("hausdorff: ") + name +
                            " references point " + std::to_string(i) +
                            " outside the space");
    }
  }
}

}  // namespace

double hausdorff(const FiniteMetricSpace& space,
                 std::span<const std::size_t> s1,
                 std::span<const std::size_t> s2) {
  require_subset(space, s1, "S1");
  require_subset(space, s2, "S2");
  return std::max(directed_hausdorff(space, s1, s2),
                  directed_hausdorff(space, s2, s1));
}

namespace {

// Feasibility of radius r in the Prokhorov conditions, exhaustive over all
// non-empty subsets. Open neighborhoods: N_r(S) collects points strictly
// closer than r to some point of S. Buffers are reused across bisection
// iterations.
struct ProkhorovChecker {
  const FiniteMetricSpace& space;
  std::span<const double> mu1;
  std::span<const double> mu2;
  std::vector<double> mass1, mass2;   // subset mass by bitmask
  std::vector<std::uint32_t> ball;    // per point: open-ball bitmask
  std::vector<std::uint32_t> nbr;     // per subset: neighborhood bitmask

  ProkhorovChecker(const FiniteMetricSpace& s, std::span<const double> m1,
                   std::span<const double> m2)
      : space(s), mu1(m1), mu2(m2) {
    const std::size_t n = space.size();
    const std::size_t count = std::size_t{1} << n;
    mass1.assign(count, 0.0);
    mass2.assign(count, 0.0);
    for (std::size_t m = 1; m < count; ++m) {
      const std::size_t low = static_cast<std::size_t>(std::countr_zero(m));
      mass1[m] = mass1[m & (m - 1)] + mu1[low];
      mass2[m] = mass2[m & (m - 1)] + mu2[low];
    }
    ball.assign(n, 0);
    nbr.assign(count, 0);
  }

  bool feasible(double r) {
    const std::size_t n = space.size();
    const std::size_t count = std::size_t{1} << n;
    for (std::size_t x = 0; x < n; ++x) {
      std::uint32_t mask = 0;
      for (std::size_t y = 0; y < n; ++y) {
        if (space.distance(x, y) < r) mask |= std::uint32_t{1} << y;
      }
      ball[x] = mask;
    }
    for (std::size_t m = 1; m < count; ++m) {
      const std::size_t low = static_cast<std::size_t>(std::countr_zero(m));
      nbr[m] = nbr[m & (m - 1)] | ball[low];
      if (mass1[m] > mass2[nbr[m]] + r) return false;
      if (mass2[m] > mass1[nbr[m]] + r) return false;
    }
    return true;
  }
};

}  // namespace

double levy_prokhorov(const FiniteMetricSpace& space,
                      std::span<const double> mu1, std::span<const double> mu2,
                      double tol) {
  const std::size_t n = space.size();
  if (n > 20) {
    throw ValidationError("levy-prokhorov: n = " + std::to_string(n) +
                          " exceeds the exhaustive-oracle cap of 20");
  }
  if (!std::isfinite(tol) || tol <= 0.0) {
    throw ValidationError("levy-prokhorov: tol must be a finite positive number");
  }
  if (mu1.size() != n || mu2.size() != n) {
    throw ValidationError("levy-prokhorov: mass vectors must have length " +
                          std::to_string(n));
  }
  for (double m : mu1) {
    if (!std::isfinite(m) || m < 0.0) {
      throw ValidationError("levy-prokhorov: mu1 has a negative or non-finite mass");
    }
  }
  for (double m : mu2) {
    if (!std::isfinite(m) || m < 0.0) {
      throw ValidationError("levy-prokhorov: mu2 has a negative or non-finite mass");
    }
  }

  CompensatedSum t1sum, t2sum;
  for (double m : mu1) t1sum.add(m);
  for (double m : mu2) t2sum.add(m);
  const double t1 = t1sum.value();
  const double t2 = t2sum.value();

  ProkhorovChecker checker(space, mu1, mu2);
  if (checker.feasible(0.0)) return 0.0;  // only when both measures vanish

  double lo = 0.0;
  double hi = std::max(space.diameter(), std::fabs(t1 - t2)) + std::max(t1, t2);
  while (hi - lo > tol) {
    const double mid = lo + (hi - lo) / 2.0;
    if (checker.feasible(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return lo + (hi - lo) / 2.0;
}

ProfileSampler::ProfileSampler(std::uint64_t seed, SamplerConfig config)
    : rng_(seed), config_(config) {}

RadialProfile ProfileSampler::next() {
  std::uniform_int_distribution<std::size_t> atom_count(1, config_.max_atoms);
  std::uniform_real_distribution<double> radius(0.0, config_.max_radius);
  std::uniform_real_distribution<double> mass(0.0, config_.max_mass);
  const std::size_t n = atom_count(rng_);
  std::vector<Atom> atoms;
  atoms.reserve(n);
  atoms.push_back({0.0, mass(rng_)});
  for (std::size_t i = 1; i < n; ++i) atoms.push_back({radius(rng_), mass(rng_)});
  return RadialProfile("s" + std::to_string(count_++), std::move(atoms));
}

namespace {

std::string describe(const StepFunction& f) {
  std::string out = "{";
  for (std::size_t i = 0; i < f.breakpoints().size(); ++i) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "(%.17g,%.17g)", f.breakpoints()[i],
                  f.values()[i]);
    if (i > 0) out += ",";
    out += buf;
  }
  return out + "}";
}

}  // namespace

std::vector<PseudometricReport::Violation> check_pseudometric_triple(
    const StepFunction& f1, const StepFunction& f2, const StepFunction& f3,
    double slack) {
  std::vector<PseudometricReport::Violation> violations;
  const auto value = [](const StepFunction& a, const StepFunction& b) {
    return d_rd_value(a, b, Mode::exact_integral);
  };
  const double self = value(f1, f1);
  if (std::fabs(self) > slack) {
    violations.push_back({"self-distance", "f1=" + describe(f1), std::fabs(self)});
  }
  const double d12 = value(f1, f2);
  const double d21 = value(f2, f1);
  if (std::fabs(d12 - d21) > slack) {
    violations.push_back({"symmetry", "f1=" + describe(f1) + " f2=" + describe(f2),
                          std::fabs(d12 - d21)});
  }
  const double d13 = value(f1, f3);
  const double d23 = value(f2, f3);
  if (d13 > d12 + d23 + slack) {
    violations.push_back({"triangle",
                          "f1=" + describe(f1) + " f2=" + describe(f2) +
                              " f3=" + describe(f3),
                          d13 - (d12 + d23)});
  }
  return violations;
}

PseudometricReport check_pseudometric(ProfileSampler& sampler,
                                      std::uint64_t trials) {
  PseudometricReport report;
  report.trials = trials;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const StepFunction f1 = cumulative_distribution(sampler.next());
    const StepFunction f2 = cumulative_distribution(sampler.next());
    const StepFunction f3 = cumulative_distribution(sampler.next());
    auto violations = check_pseudometric_triple(f1, f2, f3);
    report.violations.insert(report.violations.end(), violations.begin(),
                             violations.end());
  }
  return report;
}

}  // namespace rdd
