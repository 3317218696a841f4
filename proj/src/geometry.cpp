#include "mckibben/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "mckibben/errors.hpp"

namespace mckibben {

namespace {

void require_positive(double value, std::string_view name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(fmt::format("{} = {} must be positive and finite", name, value));
  }
}

double relative_spread(const std::vector<double>& estimates) {
  double spread = 0.0;
  for (std::size_t i = 0; i < estimates.size(); ++i) {
    for (std::size_t j = i + 1; j < estimates.size(); ++j) {
      const double gap = std::abs(estimates[i] - estimates[j]);
      spread = std::max(spread, gap / std::max(estimates[i], estimates[j]));
    }
  }
  return spread;
}

}  // namespace

void require_braid_angle(double theta, std::string_view name) {
  if (!(theta > 0.0 && theta < kHalfPi)) {
    throw DomainError(fmt::format("{} = {} rad ({} deg) is outside the open interval (0, pi/2)",
                                  name, theta, theta * 180.0 / std::numbers::pi));
  }
}

BraidSpec::BraidSpec(double fiber_length, double turns)
    : fiber_length_(fiber_length), turns_(turns) {
  require_positive(fiber_length, "fiber length b");
  require_positive(turns, "turn count N");
}

double BraidSpec::d0() const noexcept {
  return fiber_length_ / (turns_ * std::numbers::pi);
}

double length_of(const BraidSpec& braid, double theta) {
  require_braid_angle(theta);
  return braid.fiber_length() * std::cos(theta);
}

double diameter_of(const BraidSpec& braid, double theta) {
  require_braid_angle(theta);
  return braid.d0() * std::sin(theta);
}

double external_area_of(const BraidSpec& braid, double theta) {
  const double d = diameter_of(braid, theta);
  return std::numbers::pi / 4.0 * d * d;
}

double fiber_length_from(double length, double diameter, double turns) {
  require_positive(length, "length L");
  require_positive(turns, "turn count N");
  if (!(diameter >= 0.0) || !std::isfinite(diameter)) {
    throw DomainError(fmt::format("diameter D = {} must be non-negative and finite", diameter));
  }
  return std::hypot(length, diameter * std::numbers::pi * turns);
}

double theta_from_length(const BraidSpec& braid, double length) {
  if (!(length > 0.0 && length < braid.fiber_length())) {
    throw DomainError(fmt::format("length L = {} m must lie in (0, b = {} m)", length,
                                  braid.fiber_length()));
  }
  return std::acos(length / braid.fiber_length());
}

double theta_from_diameter(const BraidSpec& braid, double diameter) {
  if (!(diameter > 0.0 && diameter < braid.d0())) {
    throw DomainError(
        fmt::format("diameter D = {} m must lie in (0, D0 = {} m)", diameter, braid.d0()));
  }
  return std::asin(diameter / braid.d0());
}

BraidSpec equivalent_braid(const BraidSpec& unit, int count) {
  if (count < 1) {
    throw DomainError(fmt::format("fascicle count n = {} must be at least 1", count));
  }
  return BraidSpec(unit.fiber_length(), unit.turns() / std::sqrt(static_cast<double>(count)));
}

GeometryState::GeometryState(BraidSpec braid, double theta) : braid_(braid), theta_(theta) {
  require_braid_angle(theta);
}

ConsistencyReport check_consistency(const RawParameterSet& raw, double tolerance) {
  require_positive(raw.length, "length L");
  require_positive(raw.diameter, "diameter D");
  require_positive(raw.turns, "turn count N");
  require_positive(tolerance, "tolerance");

  ConsistencyReport report;
  report.tolerance = tolerance;
  report.b_from_pythagoras = fiber_length_from(raw.length, raw.diameter, raw.turns);

  std::vector<double> estimates{report.b_from_pythagoras};
  if (raw.theta) {
    require_braid_angle(*raw.theta);
    report.b_from_length = raw.length / std::cos(*raw.theta);
    report.b_from_diameter = raw.diameter * raw.turns * std::numbers::pi / std::sin(*raw.theta);
    estimates.push_back(*report.b_from_length);
    estimates.push_back(*report.b_from_diameter);
  }
  report.max_relative_spread = relative_spread(estimates);
  report.consistent = report.max_relative_spread <= tolerance;
  return report;
}

Resolution resolve(const RawParameterSet& raw, double input_tolerance) {
  ConsistencyReport input_report = check_consistency(raw, input_tolerance);

  const BraidSpec braid(input_report.b_from_pythagoras, raw.turns);
  const double theta = theta_from_length(braid, raw.length);
  const double theta_check = theta_from_diameter(braid, raw.diameter);
  if (std::abs(theta - theta_check) >= 1e-10) {
    throw NumericalError(fmt::format("length and diameter imply different angles ({} vs {} rad)",
                                     theta, theta_check),
                         std::abs(theta - theta_check));
  }

  ConsistencyReport resolved_report =
      check_consistency({raw.length, raw.diameter, theta, raw.turns}, kGeneratedTolerance);
  return Resolution{braid, theta, raw.theta, std::move(input_report),
                    std::move(resolved_report)};
}

Resolution resolve(double length, double diameter, double turns) {
  return resolve(RawParameterSet{length, diameter, std::nullopt, turns});
}

StrokeSpec::StrokeSpec(double theta_1, double theta_2) : theta_1_(theta_1), theta_2_(theta_2) {
  require_braid_angle(theta_1, "theta_1");
  require_braid_angle(theta_2, "theta_2");
}

double gamma_of(const StrokeSpec& stroke) {
  return std::sin(stroke.theta_2()) / std::sin(stroke.theta_1());
}

}  // namespace mckibben
