#include "mckibben/energy_audit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <fmt/format.h>

#include "mckibben/errors.hpp"

namespace mckibben {

namespace {

constexpr unsigned kMaxQuadratureDepth = 30;

template <typename Force>
WorkIntegral integrate_over_length(const BraidSpec& braid, const StrokeSpec& stroke,
                                   double tolerance, Force&& force_at_theta) {
  if (!(tolerance > 0.0)) {
    throw DomainError(fmt::format("quadrature tolerance {} must be positive", tolerance));
  }
  const double l1 = length_of(braid, stroke.theta_1());
  const double l2 = length_of(braid, stroke.theta_2());
  if (l1 == l2) return {0.0, 0.0};

  const double b = braid.fiber_length();
  auto integrand = [&](double length) { return force_at_theta(std::acos(length / b)); };

  double error = 0.0;
  double l1_norm = 0.0;
  const double lo = std::min(l1, l2);
  const double hi = std::max(l1, l2);
  double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      integrand, lo, hi, kMaxQuadratureDepth, tolerance, &error, &l1_norm);
  if (error > tolerance * l1_norm) {
    throw NumericalError(
        fmt::format("work integral did not converge: error estimate {} J exceeds {} of {} J",
                    error, tolerance, l1_norm),
        l1_norm > 0.0 ? error / l1_norm : error);
  }
  if (l2 < l1) value = -value;
  return {value, error};
}

}  // namespace

double volume_of(const BraidSpec& braid, double theta) {
  const double d = diameter_of(braid, theta);
  return std::numbers::pi / 4.0 * d * d * length_of(braid, theta);
}

double delta_volume(const BraidSpec& braid, const StrokeSpec& stroke) {
  const double gamma = gamma_of(stroke);
  const double d1 = diameter_of(braid, stroke.theta_1());
  const double l1 = length_of(braid, stroke.theta_1());
  const double l2 = length_of(braid, stroke.theta_2());
  return std::numbers::pi / 4.0 * d1 * d1 * (gamma * gamma * l2 - l1);
}

double delta_volume_two_state(const BraidSpec& braid, const StrokeSpec& stroke) {
  return volume_of(braid, stroke.theta_2()) - volume_of(braid, stroke.theta_1());
}

double average_force(GaugePressure pressure, double delta_volume, double delta_length) {
  if (delta_length == 0.0 || !std::isfinite(delta_length)) {
    throw DomainError("average force is undefined for a zero length change");
  }
  return -pressure.pascals() * delta_volume / delta_length;
}

WorkIntegral work_integral(const BraidSpec& braid, const StrokeSpec& stroke,
                           GaugePressure pressure, double tolerance) {
  return integrate_over_length(braid, stroke, tolerance, [&](double theta) {
    return force_thin(braid, theta, pressure);
  });
}

WorkIntegral work_integral_thick(const BraidSpec& braid, const WallSpec& wall,
                                 const StrokeSpec& stroke, GaugePressure pressure,
                                 double tolerance) {
  return integrate_over_length(braid, stroke, tolerance, [&](double theta) {
    return force_thick(braid, theta, wall, pressure);
  });
}

EnergyAudit audit(const BraidSpec& braid, const StrokeSpec& stroke, GaugePressure pressure) {
  EnergyAudit result{};
  result.delta_volume = delta_volume(braid, stroke);
  result.delta_length = length_of(braid, stroke.theta_2()) - length_of(braid, stroke.theta_1());
  result.pressure = pressure.pascals();
  result.average_force = result.delta_length == 0.0
                             ? 0.0
                             : average_force(pressure, result.delta_volume, result.delta_length);
  result.energy_in = pressure.pascals() * std::abs(result.delta_volume);
  result.energy_out = std::abs(result.average_force * result.delta_length);
  return result;
}

PackEnergyReport pack_vs_equivalent_energy(const BraidSpec& unit, int count,
                                           const StrokeSpec& stroke, GaugePressure pressure,
                                           double tolerance) {
  const BraidSpec equivalent = equivalent_braid(unit, count);

  const double dv_unit = delta_volume(unit, stroke);
  const double dv_pack = count * dv_unit;
  const double dv_eq = delta_volume(equivalent, stroke);
  const double dl_unit = length_of(unit, stroke.theta_2()) - length_of(unit, stroke.theta_1());
  const double dl_eq =
      length_of(equivalent, stroke.theta_2()) - length_of(equivalent, stroke.theta_1());

  const double scale = std::max(std::abs(dv_pack), std::abs(dv_eq));
  const double gap = scale == 0.0 ? 0.0 : std::abs(dv_pack - dv_eq) / scale;

  PackEnergyReport report{count, equivalent, dv_unit, dv_pack, dv_eq, 0.0, 0.0, gap,
                          gap <= tolerance};
  if (dl_unit != 0.0) {
    report.average_force_pack = average_force(pressure, dv_pack, dl_unit);
    report.average_force_equivalent = average_force(pressure, dv_eq, dl_eq);
  }
  return report;
}

}  // namespace mckibben
