#pragma once

// Packs of n identical fascicles versus a single "equivalent" actuator.
//
// The equivalent actuator has the same length and braid angle as a fascicle
// and n times its external cross-sectional area. Equal L and theta force an
// equal fiber length b; the larger diameter then forces fewer turns,
// N_eq = N_ind / sqrt(n). Holding N fixed instead yields a braid that cannot
// exist, which `replicate_original_error` demonstrates.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mckibben/force_model.hpp"
#include "mckibben/geometry.hpp"

namespace mckibben {

class ActuatorDesign {
 public:
  // Throws DomainError if the wall exceeds the radius at the reference angle.
  ActuatorDesign(BraidSpec braid, WallSpec wall, double reference_theta);

  const BraidSpec& braid() const noexcept { return braid_; }
  const WallSpec& wall() const noexcept { return wall_; }
  double reference_theta() const noexcept { return reference_theta_; }

  double diameter() const { return diameter_of(braid_, reference_theta_); }
  double length() const { return length_of(braid_, reference_theta_); }
  double wall_thickness() const { return wall_.thickness_at(diameter()); }
  double relative_wall_thickness() const { return wall_.relative_at(diameter()); }

  // Same design compared at another braid angle.
  ActuatorDesign at(double theta) const { return {braid_, wall_, theta}; }

  friend bool operator==(const ActuatorDesign&, const ActuatorDesign&) = default;

 private:
  BraidSpec braid_;
  WallSpec wall_;
  double reference_theta_;
};

class PackSpec {
 public:
  PackSpec(ActuatorDesign unit, int count);

  const ActuatorDesign& unit() const noexcept { return unit_; }
  int count() const noexcept { return count_; }

 private:
  ActuatorDesign unit_;
  int count_;
};

// How the equivalent actuator's wall is chosen.
enum class ThicknessPolicy {
  kRelative,  // same t_k / D as the fascicle
  kAbsolute,  // same t_k as the fascicle
};

ActuatorDesign equivalent_design(const ActuatorDesign& unit, int count,
                                 ThicknessPolicy policy = ThicknessPolicy::kRelative);

// Thick-wall force of one actuator per pascal of gauge pressure (N/Pa).
double force_per_pressure(const ActuatorDesign& design);
// n times the fascicle's force per pascal (N/Pa).
double pack_force_per_pressure(const PackSpec& pack);

// One row of the pack/equivalent comparison. Forces are N/Pa.
struct ComparisonRow {
  int count = 0;
  double pack_force_per_pressure = 0.0;
  double equivalent_relative_force_per_pressure = 0.0;
  double equivalent_absolute_force_per_pressure = 0.0;
  // Set when this row could not be computed; the numbers are then unset.
  std::optional<std::string> error;
};

// One row per requested count, in input order. Throws DomainError only for an
// empty count list; per-row failures are reported in ComparisonRow::error.
std::vector<ComparisonRow> compare(const ActuatorDesign& unit, std::span<const int> counts);

struct ForcePair {
  double pack;        // N/Pa
  double equivalent;  // N/Pa
};

// Thin-wall pack force (n times the fascicle) against the thin-wall force of
// the sqrt(n)-scaled equivalent, each evaluated on its own.
ForcePair equality_theorem_thin(const BraidSpec& unit, double theta, int count);
// Thick-wall counterpart under the chosen thickness policy.
ForcePair equality_theorem_thick(const ActuatorDesign& unit, int count,
                                 ThicknessPolicy policy = ThicknessPolicy::kRelative);

// External cylinder volume (pi/4) D^2 L at the reference angle.
double external_volume(const ActuatorDesign& design);
// Volume of the elastomer annulus between D and D - 2 t_k.
double elastomer_volume(const ActuatorDesign& design);

// Builds the equivalent the way the original fascicle study did (diameter
// scaled by sqrt(n), L, theta and N held fixed) and checks it. For n > 1 the
// result is inconsistent. Its force is deliberately not offered.
ConsistencyReport replicate_original_error(const ActuatorDesign& unit, int count,
                                           double tolerance = kGeneratedTolerance);

// |a - b| / max(|a|, |b|, scale); zero when everything is zero.
double relative_gap(double a, double b, double scale = 0.0);

}  // namespace mckibben
