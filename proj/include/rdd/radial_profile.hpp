#pragma once

#include <span>
#include <string>
#include <vector>

#include "rdd/step_function.hpp"

namespace rdd {

struct Atom {
  double radius;  // distance from the origin
  double mass;    // point mass sitting at that distance
};

// A rooted space reduced to what the distance computation needs: the multiset
// of (distance-from-origin, mass) atoms. The origin itself is always present
// at radius 0, possibly with mass 0.
class RadialProfile {
 public:
  RadialProfile(std::string origin_id, std::vector<Atom> atoms);

  const std::string& origin_id() const { return origin_id_; }
  std::span<const Atom> atoms() const { return atoms_; }
  double total_mass() const;

 private:
  std::string origin_id_;
  std::vector<Atom> atoms_;
};

// Cumulative radial distribution: m(r) = total mass of atoms within distance
// r of the origin. Coincident radii are merged by summing their masses.
StepFunction cumulative_distribution(const RadialProfile& profile);

// Rounds every radius to the given number of decimal places (0..15). Opt-in
// knob for taming accumulated shortest-path rounding before radii are merged
// by exact comparison; nothing quantizes by default.
RadialProfile quantize_radii(const RadialProfile& profile, int decimals);

}  // namespace rdd
