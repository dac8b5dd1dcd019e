#pragma once

#include <span>
#include <vector>

namespace rdd {

// Right-continuous, non-decreasing step function on [0, inf). The value on
// [breakpoint[i], breakpoint[i+1]) is value[i]; before the first breakpoint it
// is 0; from the last breakpoint on it stays at the total mass.
//
// Construction canonicalizes: a breakpoint that does not change the running
// value is dropped, and the everywhere-zero function is stored as the single
// pair (0, 0). Two StepFunctions compare equal iff they are pointwise equal.
class StepFunction {
 public:
  // breakpoints strictly increasing, first >= 0; values non-decreasing,
  // first >= 0; everything finite. Violations raise ValidationError.
  StepFunction(std::vector<double> breakpoints, std::vector<double> values);

  static StepFunction zero();

  // Value at radius r. Negative or NaN r is a ValidationError.
  double evaluate(double r) const;

  std::span<const double> breakpoints() const { return breakpoints_; }
  std::span<const double> values() const { return values_; }
  double total_mass() const { return values_.back(); }

  friend bool operator==(const StepFunction&, const StepFunction&) = default;

 private:
  StepFunction() = default;
  // Trusted fast path for construction out of already-canonical data.
  friend StepFunction cumulative_distribution(const class RadialProfile&);

  std::vector<double> breakpoints_;
  std::vector<double> values_;
};

// Sorted union of the two breakpoint sets; radii compare by exact value.
std::vector<double> merged_radii(const StepFunction& f1, const StepFunction& f2);

}  // namespace rdd
