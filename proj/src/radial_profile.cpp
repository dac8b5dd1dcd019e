#include "rdd/radial_profile.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "rdd/summation.hpp"
#include "rdd/validation.hpp"

namespace rdd {

RadialProfile::RadialProfile(std::string origin_id, std::vector<Atom> atoms)
    : origin_id_(std::move(origin_id)), atoms_(std::move(atoms)) {
  if (atoms_.empty()) {
    throw ValidationError("profile '" + origin_id_ + "': atom list is empty");
  }
  bool has_origin = false;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const Atom& a = atoms_[i];
    if (!std::isfinite(a.radius) || a.radius < 0.0) {
      throw ValidationError("profile '" + origin_id_ + "': atom " +
                            std::to_string(i) +
                            " has a negative or non-finite radius");
    }
    if (!std::isfinite(a.mass) || a.mass < 0.0) {
      throw ValidationError("profile '" + origin_id_ + "': atom " +
                            std::to_string(i) +
                            " has a negative or non-finite mass");
    }
    has_origin = has_origin || a.radius == 0.0;
  }
  if (!has_origin) {
    throw ValidationError("profile '" + origin_id_ +
                          "': no atom at radius 0 (origin missing)");
  }
}

double RadialProfile::total_mass() const {
  CompensatedSum total;
  for (const Atom& a : atoms_) total.add(a.mass);
  return total.value();
}

StepFunction cumulative_distribution(const RadialProfile& profile) {
  std::vector<Atom> atoms(profile.atoms().begin(), profile.atoms().end());
  // Sorting by (radius, mass) makes the construction independent of the
  // atom ordering, bit for bit.
  std::sort(atoms.begin(), atoms.end(), [](const Atom& x, const Atom& y) {
    return x.radius != y.radius ? x.radius < y.radius : x.mass < y.mass;
  });

  // Canonical form built directly: the profile's invariants already give
  // finite nonnegative radii and masses, grouping gives strictly increasing
  // breakpoints, and nonnegative group masses keep the values non-decreasing.
  StepFunction out;
  out.breakpoints_.reserve(atoms.size());
  out.values_.reserve(atoms.size());
  CompensatedSum running;
  double run = 0.0;
  std::size_t i = 0;
  while (i < atoms.size()) {
    const double r = atoms[i].radius;
    // Each radius group is summed on its own, so pre-merging coincident
    // atoms into one (with the same compensated sum) changes nothing.
    CompensatedSum group;
    while (i < atoms.size() && atoms[i].radius == r) {
      group.add(atoms[i].mass);
      ++i;
    }
    running.add(group.value());
    const double value = running.value();
    if (value <= run) continue;  // no change; breakpoint is not canonical
    out.breakpoints_.push_back(r);
    out.values_.push_back(value);
    run = value;
  }
  if (out.breakpoints_.empty()) {
    out.breakpoints_.push_back(0.0);
    out.values_.push_back(0.0);
  }
  return out;
}

RadialProfile quantize_radii(const RadialProfile& profile, int decimals) {
  if (decimals < 0 || decimals > 15) {
    throw ValidationError("quantize: decimals must be in [0, 15]");
  }
  const double scale = std::pow(10.0, decimals);
  std::vector<Atom> atoms(profile.atoms().begin(), profile.atoms().end());
  for (Atom& a : atoms) a.radius = std::round(a.radius * scale) / scale;
  return RadialProfile(profile.origin_id(), std::move(atoms));
}

}  // namespace rdd
