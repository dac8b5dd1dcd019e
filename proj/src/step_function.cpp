#include "rdd/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rdd/validation.hpp"

namespace rdd {

StepFunction::StepFunction(std::vector<double> breakpoints,
                           std::vector<double> values) {
  if (breakpoints.size() != values.size()) {
    throw ValidationError("step function: " + std::to_string(breakpoints.size()) +
                          " breakpoints vs " + std::to_string(values.size()) +
                          " values");
  }
  if (breakpoints.empty()) {
    throw ValidationError("step function: needs at least one breakpoint");
  }
  double prev_value = 0.0;
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    const double r = breakpoints[i];
    const double v = values[i];
    if (!std::isfinite(r) || r < 0.0) {
      throw ValidationError("step function: breakpoint " + std::to_string(i) +
                            " is not a finite nonnegative radius");
    }
    if (i > 0 && r <= breakpoints[i - 1]) {
      throw ValidationError("step function: breakpoints not strictly increasing at index " +
                            std::to_string(i));
    }
    if (!std::isfinite(v) || v < 0.0) {
      throw ValidationError("step function: value " + std::to_string(i) +
                            " is not a finite nonnegative mass");
    }
    if (i > 0 && v < prev_value) {
      throw ValidationError("step function: values decrease at index " +
                            std::to_string(i));
    }
    prev_value = v;
  }

  // Canonical form: keep only breakpoints that change the running value.
  breakpoints_.reserve(breakpoints.size());
  values_.reserve(values.size());
  double run = 0.0;
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (values[i] != run) {
      breakpoints_.push_back(breakpoints[i]);
      values_.push_back(values[i]);
      run = values[i];
    }
  }
  if (breakpoints_.empty()) {
    breakpoints_.push_back(0.0);
    values_.push_back(0.0);
  }
}

StepFunction StepFunction::zero() { return StepFunction({0.0}, {0.0}); }

double StepFunction::evaluate(double r) const {
  if (!(r >= 0.0)) {
    throw ValidationError("step function: evaluation radius must be >= 0");
  }
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), r);
  if (it == breakpoints_.begin()) return 0.0;
  return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

std::vector<double> merged_radii(const StepFunction& f1, const StepFunction& f2) {
  const auto b1 = f1.breakpoints();
  const auto b2 = f2.breakpoints();
  std::vector<double> merged;
  merged.reserve(b1.size() + b2.size());
  std::set_union(b1.begin(), b1.end(), b2.begin(), b2.end(),
                 std::back_inserter(merged));
  return merged;
}

}  // namespace rdd
