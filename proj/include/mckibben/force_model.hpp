#pragma once

// Quasi-static force laws for a braided pneumatic muscle.
//
// Sign convention: positive force is tensile (the muscle pulls). Extending
// muscles, with braid angles above arccos(1/sqrt(3)) ~ 54.7356 deg, produce
// negative values. Comparisons of "larger force" elsewhere use magnitudes.
//
// Limitation: only the volumetric effect of the elastomer wall is modelled.
// The elastic restoring force of the bladder is NOT included, so every
// force here is an upper bound on what a real actuator delivers.

#include <cmath>

#include "mckibben/geometry.hpp"

namespace mckibben {

// arccos(1/sqrt(3)): the thin-wall zero-force braid angle.
inline const double kNeutralAngle = std::acos(1.0 / std::sqrt(3.0));

inline constexpr double kMaxRelativeThickness = 0.5;

// Pressure above ambient, Pa. Vacuum actuation is out of scope.
class GaugePressure {
 public:
  explicit GaugePressure(double pascals);

  double pascals() const noexcept { return pascals_; }

 private:
  double pascals_;
};

// Elastomer wall, stored either as an absolute thickness t_k or as the
// fraction t_k / D of the external diameter. Converting between the two
// always needs an explicit diameter because D changes with the braid angle.
class WallSpec {
 public:
  static WallSpec absolute(double thickness);
  static WallSpec relative(double fraction);

  bool is_relative() const noexcept { return relative_; }
  // The stored number: metres for absolute walls, a fraction for relative.
  double stored_value() const noexcept { return value_; }

  double thickness_at(double diameter) const;
  // Throws DomainError ("wall exceeds radius") if the result exceeds 0.5.
  double relative_at(double diameter) const;

  friend bool operator==(const WallSpec&, const WallSpec&) = default;

 private:
  WallSpec(double value, bool relative) : value_(value), relative_(relative) {}

  double value_;
  bool relative_;
};

// (pi P / 4) D0^2 (3 cos^2 theta - 1)
double force_thin(const BraidSpec& braid, double theta, GaugePressure pressure);

// Thin-wall force plus the wall-volume correction
//   pi P (D0 t_k (2 sin theta - 1/sin theta) - t_k^2).
double force_thick(const BraidSpec& braid, double theta, const WallSpec& wall,
                   GaugePressure pressure);

// Force divided by pressure and current external area, as a function of the
// braid angle and relative wall thickness:
//   -4 t^2 + (8 - 4 csc^2 theta) t + (2 csc^2 theta - 3)
// theta may equal pi/2 here: F_hat(pi/2, 0) = -1, a piston of equal area.
double normalized_force(double theta, double relative_thickness);

double force_from_normalized(double theta, double relative_thickness, GaugePressure pressure,
                             double external_area);

// Braid angle at which normalized_force vanishes:
//   sin^2 theta* = 2 / (3 - 2 t).
// Defined for 0 <= t < 0.5; at t = 0.5 the force is identically zero.
double zero_force_angle(double relative_thickness);

// Evaluates the thick-wall force per unit pressure once in terms of D0 and
// once in terms of the instantaneous diameter D = D0 sin(theta), and returns
// |difference| / max(|F_D0|, |F_D|, largest term magnitude). Should sit at
// rounding level for every valid input.
double parameterization_identity_check(double theta, const BraidSpec& braid, const WallSpec& wall);

}  // namespace mckibben
