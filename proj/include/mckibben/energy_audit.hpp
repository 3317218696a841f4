#pragma once

// Energy bookkeeping for an ideal (lossless, non-storing) braided muscle at
// constant gauge pressure: flow work P dV in equals mechanical work F dL out.

#include "mckibben/force_model.hpp"
#include "mckibben/geometry.hpp"

namespace mckibben {

inline constexpr double kQuadratureTolerance = 1e-10;

// Enclosed cylinder volume (pi/4) D^2 L at the given braid angle.
double volume_of(const BraidSpec& braid, double theta);

// Volume change over a stroke, (pi/4) D1^2 (gamma^2 L2 - L1).
double delta_volume(const BraidSpec& braid, const StrokeSpec& stroke);
// Same quantity as V(theta_2) - V(theta_1).
double delta_volume_two_state(const BraidSpec& braid, const StrokeSpec& stroke);

// Average force over a stroke from P dV = F_avg dL. The sign follows the
// tensile-positive convention, F_avg = -P dV / dL, so an extension stroke
// that draws in volume reports a negative force. Throws DomainError when
// delta_length is zero.
double average_force(GaugePressure pressure, double delta_volume, double delta_length);

struct WorkIntegral {
  double value;           // J
  double error_estimate;  // J, as reported by the quadrature
};

// Integrates the thin-wall force over length from L1 to L2 with adaptive
// Gauss-Kronrod quadrature. Under the thin model this equals -P dV.
// Throws NumericalError if the requested relative tolerance is not met.
WorkIntegral work_integral(const BraidSpec& braid, const StrokeSpec& stroke,
                           GaugePressure pressure,
                           double tolerance = kQuadratureTolerance);

// Thick-wall counterpart, reported for information only. The wall is
// converted at every intermediate diameter, so a relative wall keeps its
// fraction and an absolute wall keeps its thickness along the stroke.
WorkIntegral work_integral_thick(const BraidSpec& braid, const WallSpec& wall,
                                 const StrokeSpec& stroke, GaugePressure pressure,
                                 double tolerance = kQuadratureTolerance);

struct EnergyAudit {
  double delta_volume;  // m^3, signed
  double delta_length;  // m, signed
  double pressure;      // Pa
  double average_force; // N, signed (0 for a zero stroke)
  double energy_in;     // P |dV|
  double energy_out;    // |F_avg dL|
};

EnergyAudit audit(const BraidSpec& braid, const StrokeSpec& stroke, GaugePressure pressure);

// Same stroke applied to a pack of n fascicles and to the single actuator of
// equal length, equal braid angle and n times the external area.
struct PackEnergyReport {
  int count;
  BraidSpec equivalent;
  double delta_volume_unit;
  double delta_volume_pack;        // n * unit
  double delta_volume_equivalent;
  double average_force_pack;
  double average_force_equivalent;
  double relative_gap;             // between the two volume changes
  bool equal;                      // relative_gap <= tolerance
};

inline constexpr double kEqualityTolerance = 1e-12;

PackEnergyReport pack_vs_equivalent_energy(const BraidSpec& unit, int count,
                                           const StrokeSpec& stroke, GaugePressure pressure,
                                           double tolerance = kEqualityTolerance);

}  // namespace mckibben
