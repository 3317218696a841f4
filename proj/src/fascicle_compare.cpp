#include "mckibben/fascicle_compare.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "mckibben/errors.hpp"

namespace mckibben {

namespace {

const GaugePressure kUnitPressure{1.0};

void require_count(int count) {
  if (count < 1) {
    throw DomainError(fmt::format("fascicle count n = {} must be at least 1", count));
  }
}

}  // namespace

ActuatorDesign::ActuatorDesign(BraidSpec braid, WallSpec wall, double reference_theta)
    : braid_(braid), wall_(wall), reference_theta_(reference_theta) {
  require_braid_angle(reference_theta, "reference theta");
  wall_.relative_at(diameter());
}

PackSpec::PackSpec(ActuatorDesign unit, int count) : unit_(std::move(unit)), count_(count) {
  require_count(count);
}

ActuatorDesign equivalent_design(const ActuatorDesign& unit, int count, ThicknessPolicy policy) {
  const BraidSpec braid = equivalent_braid(unit.braid(), count);
  const double scale = std::sqrt(static_cast<double>(count));

  WallSpec wall = unit.wall();
  if (policy == ThicknessPolicy::kRelative) {
    if (!wall.is_relative()) wall = WallSpec::absolute(scale * wall.stored_value());
  } else {
    wall = WallSpec::absolute(unit.wall_thickness());
  }
  return ActuatorDesign(braid, wall, unit.reference_theta());
}

double force_per_pressure(const ActuatorDesign& design) {
  return force_thick(design.braid(), design.reference_theta(), design.wall(), kUnitPressure);
}

double pack_force_per_pressure(const PackSpec& pack) {
  return pack.count() * force_per_pressure(pack.unit());
}

std::vector<ComparisonRow> compare(const ActuatorDesign& unit, std::span<const int> counts) {
  if (counts.empty()) throw DomainError("comparison needs at least one fascicle count");

  std::vector<ComparisonRow> rows;
  rows.reserve(counts.size());
  for (const int count : counts) {
    ComparisonRow row;
    row.count = count;
    try {
      row.pack_force_per_pressure = pack_force_per_pressure(PackSpec(unit, count));
      row.equivalent_relative_force_per_pressure =
          force_per_pressure(equivalent_design(unit, count, ThicknessPolicy::kRelative));
      row.equivalent_absolute_force_per_pressure =
          force_per_pressure(equivalent_design(unit, count, ThicknessPolicy::kAbsolute));
    } catch (const DomainError& e) {
      row = ComparisonRow{count, 0.0, 0.0, 0.0, e.what()};
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ForcePair equality_theorem_thin(const BraidSpec& unit, double theta, int count) {
  require_count(count);
  const double pack = count * force_thin(unit, theta, kUnitPressure);
  const double equivalent = force_thin(equivalent_braid(unit, count), theta, kUnitPressure);
  return {pack, equivalent};
}

ForcePair equality_theorem_thick(const ActuatorDesign& unit, int count, ThicknessPolicy policy) {
  return {pack_force_per_pressure(PackSpec(unit, count)),
          force_per_pressure(equivalent_design(unit, count, policy))};
}

double external_volume(const ActuatorDesign& design) {
  const double d = design.diameter();
  return std::numbers::pi / 4.0 * d * d * design.length();
}

double elastomer_volume(const ActuatorDesign& design) {
  const double d = design.diameter();
  const double inner = d - 2.0 * design.wall_thickness();
  return std::numbers::pi / 4.0 * (d * d - inner * inner) * design.length();
}

ConsistencyReport replicate_original_error(const ActuatorDesign& unit, int count,
                                           double tolerance) {
  require_count(count);
  const RawParameterSet impossible{unit.length(),
                                   std::sqrt(static_cast<double>(count)) * unit.diameter(),
                                   unit.reference_theta(), unit.braid().turns()};
  return check_consistency(impossible, tolerance);
}

double relative_gap(double a, double b, double scale) {
  const double denom = std::max({std::abs(a), std::abs(b), std::abs(scale)});
  if (denom == 0.0) return 0.0;
  return std::abs(a - b) / denom;
}

}  // namespace mckibben
