#include "mckibben/force_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "mckibben/errors.hpp"

namespace mckibben {

namespace {

constexpr double kPi = std::numbers::pi;

void require_relative_thickness(double t_hat) {
  if (!(t_hat >= 0.0 && t_hat <= kMaxRelativeThickness)) {
    throw DomainError(
        fmt::format("relative wall thickness {} is outside [0, 0.5]", t_hat));
  }
}

}  // namespace

GaugePressure::GaugePressure(double pascals) : pascals_(pascals) {
  if (!(pascals >= 0.0) || !std::isfinite(pascals)) {
    throw DomainError(fmt::format("gauge pressure {} Pa must be non-negative and finite", pascals));
  }
}

WallSpec WallSpec::absolute(double thickness) {
  if (!(thickness >= 0.0) || !std::isfinite(thickness)) {
    throw DomainError(fmt::format("wall thickness {} m must be non-negative", thickness));
  }
  return WallSpec(thickness, false);
}

WallSpec WallSpec::relative(double fraction) {
  require_relative_thickness(fraction);
  return WallSpec(fraction, true);
}

double WallSpec::thickness_at(double diameter) const {
  if (!(diameter > 0.0)) {
    throw DomainError(fmt::format("diameter {} m must be positive", diameter));
  }
  return relative_ ? value_ * diameter : value_;
}

double WallSpec::relative_at(double diameter) const {
  if (!(diameter > 0.0)) {
    throw DomainError(fmt::format("diameter {} m must be positive", diameter));
  }
  if (relative_) return value_;
  const double t_hat = value_ / diameter;
  if (t_hat > kMaxRelativeThickness) {
    throw DomainError(fmt::format(
        "wall exceeds radius: t_k = {} m at diameter {} m gives relative thickness {}", value_,
        diameter, t_hat));
  }
  return t_hat;
}

double force_thin(const BraidSpec& braid, double theta, GaugePressure pressure) {
  require_braid_angle(theta);
  const double d0 = braid.d0();
  const double c = std::cos(theta);
  return kPi * pressure.pascals() / 4.0 * d0 * d0 * (3.0 * c * c - 1.0);
}

double force_thick(const BraidSpec& braid, double theta, const WallSpec& wall,
                   GaugePressure pressure) {
  const double thin = force_thin(braid, theta, pressure);
  const double d0 = braid.d0();
  const double diameter = d0 * std::sin(theta);
  wall.relative_at(diameter);  // validates t_hat <= 0.5
  const double t = wall.thickness_at(diameter);
  const double s = std::sin(theta);
  return thin + kPi * pressure.pascals() * (d0 * t * (2.0 * s - 1.0 / s) - t * t);
}

double normalized_force(double theta, double relative_thickness) {
  // Only csc(theta) appears, so theta = pi/2 (the piston limit) is admissible.
  if (!(theta > 0.0 && theta <= kHalfPi)) {
    throw DomainError(fmt::format("theta = {} rad is outside (0, pi/2]", theta));
  }
  require_relative_thickness(relative_thickness);
  const double s = std::sin(theta);
  const double csc2 = 1.0 / (s * s);
  const double t = relative_thickness;
  return -4.0 * t * t + (8.0 - 4.0 * csc2) * t + (2.0 * csc2 - 3.0);
}

double force_from_normalized(double theta, double relative_thickness, GaugePressure pressure,
                             double external_area) {
  if (!(external_area > 0.0)) {
    throw DomainError(fmt::format("external area {} m^2 must be positive", external_area));
  }
  return normalized_force(theta, relative_thickness) * pressure.pascals() * external_area;
}

double zero_force_angle(double relative_thickness) {
  if (!(relative_thickness >= 0.0 && relative_thickness < kMaxRelativeThickness)) {
    throw DomainError(fmt::format(
        "zero-force angle needs relative thickness in [0, 0.5), got {}", relative_thickness));
  }
  return std::asin(std::sqrt(2.0 / (3.0 - 2.0 * relative_thickness)));
}

double parameterization_identity_check(double theta, const BraidSpec& braid, const WallSpec& wall) {
  require_braid_angle(theta);
  const double d0 = braid.d0();
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double diameter = d0 * s;
  wall.relative_at(diameter);
  const double t = wall.thickness_at(diameter);

  // Parameterized by the fabrication constant D0.
  const double d0_terms[] = {kPi / 4.0 * d0 * d0 * (3.0 * c * c - 1.0),
                             kPi * d0 * t * (2.0 * s - 1.0 / s), -kPi * t * t};
  // Parameterized by the instantaneous diameter D.
  const double csc2 = 1.0 / (s * s);
  const double d_terms[] = {kPi / 4.0 * diameter * diameter * (2.0 * csc2 - 3.0),
                            kPi * diameter * t * (2.0 - csc2), -kPi * t * t};

  double via_d0 = 0.0;
  double via_d = 0.0;
  double scale = 0.0;
  for (int i = 0; i < 3; ++i) {
    via_d0 += d0_terms[i];
    via_d += d_terms[i];
    scale = std::max({scale, std::abs(d0_terms[i]), std::abs(d_terms[i])});
  }
  scale = std::max({scale, std::abs(via_d0), std::abs(via_d)});
  if (scale == 0.0) return 0.0;
  return std::abs(via_d0 - via_d) / scale;
}

}  // namespace mckibben
