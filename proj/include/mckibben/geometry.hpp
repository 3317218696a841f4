#pragma once

// Kinematics of an inextensible fiber braid wrapped on a cylinder.
//
// A braid is fixed at fabrication by its unwound fiber length b and the
// number of turns N the fibers make around the axis. The braid angle theta,
// measured from the long axis, is the single configuration variable:
//
//   L = b cos(theta)
//   D = D0 sin(theta),   D0 = b / (N pi)
//   b^2 = L^2 + (D pi N)^2
//
// All quantities are SI (m, rad). Angles must lie in the open interval
// (0, pi/2); the endpoints are rejected, never clamped.

#include <numbers>
#include <optional>
#include <string_view>

namespace mckibben {

inline constexpr double kHalfPi = std::numbers::pi / 2.0;

// Relative tolerance for user-supplied (measured) parameter sets.
inline constexpr double kMeasuredTolerance = 1e-3;
// Relative tolerance for parameter sets generated by this library.
inline constexpr double kGeneratedTolerance = 1e-9;

// Throws DomainError unless 0 < theta < pi/2.
void require_braid_angle(double theta, std::string_view name = "theta");

// Actuation-invariant braid description.
class BraidSpec {
 public:
  // Throws DomainError unless both arguments are positive and finite.
  BraidSpec(double fiber_length, double turns);

  double fiber_length() const noexcept { return fiber_length_; }
  double turns() const noexcept { return turns_; }
  // Diameter the braid would reach at theta = pi/2.
  double d0() const noexcept;

  friend bool operator==(const BraidSpec&, const BraidSpec&) = default;

 private:
  double fiber_length_;
  double turns_;
};

double length_of(const BraidSpec& braid, double theta);
double diameter_of(const BraidSpec& braid, double theta);
// External cross-sectional area (pi/4) D^2.
double external_area_of(const BraidSpec& braid, double theta);

// Fiber length from the Pythagorean unrolling of one helix. D = 0 is the
// degenerate straight fiber and returns L.
double fiber_length_from(double length, double diameter, double turns);

double theta_from_length(const BraidSpec& braid, double length);
double theta_from_diameter(const BraidSpec& braid, double diameter);

// Braid of the single actuator whose external area is `count` times that of
// `unit` at every shared angle: same fiber length (equal L and theta force
// equal b), D0 scaled by sqrt(count), so N is divided by sqrt(count).
BraidSpec equivalent_braid(const BraidSpec& unit, int count);

// Instantaneous configuration of a braid.
class GeometryState {
 public:
  GeometryState(BraidSpec braid, double theta);

  const BraidSpec& braid() const noexcept { return braid_; }
  double theta() const noexcept { return theta_; }
  double length() const { return length_of(braid_, theta_); }
  double diameter() const { return diameter_of(braid_, theta_); }
  double external_area() const { return external_area_of(braid_, theta_); }

 private:
  BraidSpec braid_;
  double theta_;
};

// Parameters as reported by a datasheet or publication; not necessarily
// consistent with each other.
struct RawParameterSet {
  double length;
  double diameter;
  std::optional<double> theta;
  double turns;
};

struct ConsistencyReport {
  // b = L / cos(theta); absent when theta was not supplied.
  std::optional<double> b_from_length;
  // b = D N pi / sin(theta); absent when theta was not supplied.
  std::optional<double> b_from_diameter;
  double b_from_pythagoras = 0.0;
  // Largest |b_i - b_j| / max(b_i, b_j) over all available estimates.
  double max_relative_spread = 0.0;
  double tolerance = 0.0;
  bool consistent = false;

  bool theta_absent() const noexcept { return !b_from_length.has_value(); }
};

ConsistencyReport check_consistency(const RawParameterSet& raw,
                                    double tolerance = kMeasuredTolerance);

struct Resolution {
  BraidSpec braid;
  double theta;
  // Angle supplied with the raw input and ignored by the resolver.
  std::optional<double> discarded_theta;
  // Check of the raw input as supplied.
  ConsistencyReport input_report;
  // Check of (L, D, resolved theta, N); consistent at kGeneratedTolerance.
  ConsistencyReport resolved_report;
};

// Treats L, D and N as trustworthy, computes b from the Pythagorean relation
// and the angle from L = b cos(theta). Any supplied theta is discarded.
Resolution resolve(const RawParameterSet& raw,
                   double input_tolerance = kMeasuredTolerance);
Resolution resolve(double length, double diameter, double turns);

// Initial and final braid angle of a stroke.
class StrokeSpec {
 public:
  StrokeSpec(double theta_1, double theta_2);

  double theta_1() const noexcept { return theta_1_; }
  double theta_2() const noexcept { return theta_2_; }
  // Extension lowers the braid angle.
  bool is_extension() const noexcept { return theta_2_ < theta_1_; }

 private:
  double theta_1_;
  double theta_2_;
};

// Diameter ratio D2 / D1 = sin(theta_2) / sin(theta_1) across the stroke.
double gamma_of(const StrokeSpec& stroke);

}  // namespace mckibben
