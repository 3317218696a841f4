#include "mckibben/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "mckibben/energy_audit.hpp"
#include "mckibben/errors.hpp"
#include "mckibben/fascicle_compare.hpp"
#include "mckibben/force_model.hpp"
#include "mckibben/geometry.hpp"
#include "mckibben/units.hpp"

namespace mckibben::cli {

namespace {

// Display units: mm, mm^3, deg, kPa, N/kPa.
double mm(double metres) { return metres / units::kMillimetre; }
double mm3(double cubic_metres) { return cubic_metres * 1e9; }
double kpa(double pascals) { return pascals / units::kKilopascal; }
double per_kpa(double newtons_per_pascal) { return newtons_per_pascal * units::kKilopascal; }
double deg(double radians) { return units::degrees(radians); }

Cell optional_cell(const std::optional<double>& value) {
  if (value) return *value;
  return std::monostate{};
}

std::string yes_no(bool value) { return value ? "yes" : "no"; }

struct Unit {
  Resolution resolution;
  double reference_theta;
};

Unit resolve_unit(const RunConfig& config) {
  Resolution resolution = resolve(
      RawParameterSet{config.length, config.diameter, config.measured_theta, config.turns},
      config.tolerance);
  const double reference = config.reference_theta.value_or(resolution.theta);
  require_braid_angle(reference, "reference theta");
  return {std::move(resolution), reference};
}

void add_unit_inputs(Report& report, const RunConfig& config) {
  report.inputs.emplace_back("L_mm", mm(config.length));
  report.inputs.emplace_back("D_mm", mm(config.diameter));
  report.inputs.emplace_back("N", config.turns);
}

void add_wall_inputs(Report& report, const RunConfig& config) {
  if (config.relative_wall_thickness) {
    report.inputs.emplace_back("t_hat", *config.relative_wall_thickness);
  } else {
    report.inputs.emplace_back("t_k_mm", mm(config.wall_thickness.value_or(0.0)));
  }
}

std::string wall_label(const RunConfig& config) {
  if (config.relative_wall_thickness) {
    return fmt::format("t_hat = {:g}", *config.relative_wall_thickness);
  }
  return fmt::format("t_k = {:g} mm", mm(config.wall_thickness.value_or(0.0)));
}

}  // namespace

CommandResult cmd_resolve(const RunConfig& config) {
  const Resolution res =
      resolve(RawParameterSet{config.length, config.diameter, config.measured_theta, config.turns},
              config.tolerance);
  const ConsistencyReport& in = res.input_report;

  Report report;
  report.command = "resolve";
  add_unit_inputs(report, config);
  report.inputs.emplace_back("theta_deg", config.measured_theta
                                              ? Cell{deg(*config.measured_theta)}
                                              : Cell{std::monostate{}});
  report.inputs.emplace_back("tolerance", config.tolerance);

  report.columns = {"b_from_length_mm", "b_from_diameter_mm", "b_from_pythagoras_mm",
                    "max_relative_spread", "b_mm",               "theta_deg",
                    "D0_mm"};
  report.rows.push_back({in.b_from_length ? Cell{mm(*in.b_from_length)} : Cell{},
                         in.b_from_diameter ? Cell{mm(*in.b_from_diameter)} : Cell{},
                         mm(in.b_from_pythagoras), in.max_relative_spread,
                         mm(res.braid.fiber_length()), deg(res.theta), mm(res.braid.d0())});
  report.verdicts = {{"theta_absent", in.theta_absent()},
                     {"input_consistent", in.consistent},
                     {"resolved_consistent", res.resolved_report.consistent}};

  std::string& p = report.pretty;
  constexpr auto kRow = "  {:<30}{}\n";
  p += fmt::format("Consistency of the supplied parameters (tolerance {:g})\n", in.tolerance);
  if (in.theta_absent()) {
    p += fmt::format(kRow, "b = L / cos(theta)", "(theta absent)");
    p += fmt::format(kRow, "b = D N pi / sin(theta)", "(theta absent)");
  } else {
    p += fmt::format(kRow, "b = L / cos(theta)", fmt::format("{:.3f} mm", mm(*in.b_from_length)));
    p += fmt::format(kRow, "b = D N pi / sin(theta)",
                     fmt::format("{:.3f} mm", mm(*in.b_from_diameter)));
  }
  p += fmt::format(kRow, "b = sqrt(L^2 + (D pi N)^2)",
                   fmt::format("{:.3f} mm", mm(in.b_from_pythagoras)));
  p += fmt::format(kRow, "max relative spread", fmt::format("{:.6g}", in.max_relative_spread));
  p += fmt::format(kRow, "verdict",
                   in.theta_absent() ? "consistent (theta absent, one estimate only)"
                   : in.consistent   ? "consistent"
                                     : "inconsistent");
  if (res.discarded_theta) {
    p += fmt::format("Resolved braid (L, D and N trusted; supplied theta = {:g} deg discarded)\n",
                     deg(*res.discarded_theta));
  } else {
    p += "Resolved braid (L, D and N trusted)\n";
  }
  p += fmt::format(kRow, "b", fmt::format("{:.3f} mm", mm(res.braid.fiber_length())));
  p += fmt::format(kRow, "theta", fmt::format("{:.3f} deg", deg(res.theta)));
  p += fmt::format(kRow, "D0", fmt::format("{:.4f} mm", mm(res.braid.d0())));
  p += fmt::format(kRow, "N", fmt::format("{:g}", res.braid.turns()));

  const int code = (config.strict && !in.consistent) ? kExitVerificationFailed : kExitOk;
  return {std::move(report), code};
}

CommandResult cmd_force(const RunConfig& config) {
  const Unit unit = resolve_unit(config);
  const BraidSpec& braid = unit.resolution.braid;
  const double theta = unit.reference_theta;
  const GaugePressure pressure(config.pressure);
  const WallSpec wall = config.wall();

  const double diameter = diameter_of(braid, theta);
  const double area = external_area_of(braid, theta);
  const double t_hat = wall.relative_at(diameter);
  const double t_k = wall.thickness_at(diameter);
  const double thin = force_thin(braid, theta, pressure);
  const double thick = force_thick(braid, theta, wall, pressure);
  const double f_hat = normalized_force(theta, t_hat);
  const double from_normalized = force_from_normalized(theta, t_hat, pressure, area);
  const bool routes_agree =
      relative_gap(thick, from_normalized, pressure.pascals() * area) <= kEqualityTolerance;

  Report report;
  report.command = "force";
  add_unit_inputs(report, config);
  add_wall_inputs(report, config);
  report.inputs.emplace_back("theta_deg", deg(theta));
  report.inputs.emplace_back("pressure_kPa", kpa(config.pressure));

  report.columns = {"theta_deg", "pressure_kPa", "D_mm",      "A_mm2",      "t_k_mm",
                    "t_hat",     "F_thin_N",     "F_thick_N", "F_hat",      "F_hat_P_A_N"};
  report.rows.push_back({deg(theta), kpa(config.pressure), mm(diameter), area * 1e6, mm(t_k),
                         t_hat, thin, thick, f_hat, from_normalized});
  report.verdicts = {{"normalized_route_matches_thick", routes_agree}};

  std::string& p = report.pretty;
  constexpr auto kRow = "  {:<22}{}\n";
  p += fmt::format("Force at theta = {:.3f} deg, P' = {:g} kPa (tensile positive, extension "
                   "negative)\n",
                   deg(theta), kpa(config.pressure));
  p += fmt::format("  wall t_k = {:g} mm, t_hat = {:.6g} at D = {:.4g} mm\n", mm(t_k), t_hat,
                   mm(diameter));
  p += fmt::format(kRow, "F_thin", fmt::format("{:.3g} N", thin));
  p += fmt::format(kRow, "F_thick", fmt::format("{:.3g} N", thick));
  p += fmt::format(kRow, "F_hat (normalized)", fmt::format("{:.6g}", f_hat));
  p += fmt::format(kRow, "F_hat * P' * A", fmt::format("{:.3g} N", from_normalized));
  p += "Elastic forces of the elastomer wall are not modelled.\n";

  return {std::move(report), routes_agree ? kExitOk : kExitVerificationFailed};
}

CommandResult cmd_compare(const RunConfig& config) {
  const Unit unit_params = resolve_unit(config);
  const ActuatorDesign unit(unit_params.resolution.braid, config.wall(),
                            unit_params.reference_theta);
  const std::vector<ComparisonRow> rows = compare(unit, config.counts);
  const double unit_piston = external_area_of(unit.braid(), unit.reference_theta());

  Report report;
  report.command = "compare";
  add_unit_inputs(report, config);
  add_wall_inputs(report, config);
  report.inputs.emplace_back("theta_deg", deg(unit.reference_theta()));
  report.inputs.emplace_back("policy", std::string(to_string(config.policy)));

  report.columns = {"n", "pack_N_per_kPa", "eq_same_relative_N_per_kPa",
                    "eq_same_absolute_N_per_kPa", "N_eq", "error"};
  if (config.replicate_original_error) {
    report.columns.push_back("original_eq_max_relative_spread");
    report.columns.push_back("original_eq_consistent");
  }

  bool any_error = false;
  bool relative_equal = true;
  bool absolute_exceeds = true;
  std::vector<ConsistencyReport> original;
  for (const ComparisonRow& row : rows) {
    std::vector<Cell> cells{static_cast<long long>(row.count)};
    if (row.error) {
      any_error = true;
      cells.insert(cells.end(), {Cell{}, Cell{}, Cell{}, Cell{}, *row.error});
    } else {
      cells.insert(cells.end(), {per_kpa(row.pack_force_per_pressure),
                                 per_kpa(row.equivalent_relative_force_per_pressure),
                                 per_kpa(row.equivalent_absolute_force_per_pressure),
                                 equivalent_braid(unit.braid(), row.count).turns(), Cell{}});
      relative_equal = relative_equal &&
                       relative_gap(row.pack_force_per_pressure,
                                    row.equivalent_relative_force_per_pressure,
                                    row.count * unit_piston) <= kEqualityTolerance;
      if (row.count > 1) {
        absolute_exceeds = absolute_exceeds && std::abs(row.equivalent_absolute_force_per_pressure) >
                                                   std::abs(row.pack_force_per_pressure);
      }
    }
    if (config.replicate_original_error) {
      if (row.count >= 1) {
        original.push_back(replicate_original_error(unit, row.count));
        cells.emplace_back(original.back().max_relative_spread);
        cells.emplace_back(original.back().consistent);
      } else {
        cells.insert(cells.end(), {Cell{}, Cell{}});
      }
    }
    report.rows.push_back(std::move(cells));
  }

  report.verdicts = {{"relative_equivalent_equals_pack", relative_equal},
                     {"absolute_equivalent_exceeds_pack", absolute_exceeds},
                     {"selected_policy", std::string(to_string(config.policy))}};

  std::string& p = report.pretty;
  p += fmt::format("Force per unit pressure [N/kPa] at theta = {:.3f} deg, fascicle wall {}\n",
                   deg(unit.reference_theta()), wall_label(config));
  p += fmt::format("{:>5}{:>12}{:>20}{:>20}\n", "n", "pack", "eq (same t_hat)", "eq (same t_k)");
  for (const ComparisonRow& row : rows) {
    if (row.error) {
      p += fmt::format("{:>5}  error: {}\n", row.count, *row.error);
      continue;
    }
    p += fmt::format("{:>5}{:>12.3g}{:>20.3g}{:>20.3g}\n", row.count,
                     per_kpa(row.pack_force_per_pressure),
                     per_kpa(row.equivalent_relative_force_per_pressure),
                     per_kpa(row.equivalent_absolute_force_per_pressure));
  }
  p += fmt::format("pack equals equivalent with the same relative wall thickness: {}\n",
                   yes_no(relative_equal));
  p += fmt::format("equivalent with the same absolute wall thickness exceeds the pack: {}\n",
                   yes_no(absolute_exceeds));
  p += fmt::format("selected policy: {}\n", to_string(config.policy));
  if (config.replicate_original_error) {
    p += fmt::format(
        "Original construction (N held at {:g} while D scales by sqrt(n)), tolerance {:g}\n",
        unit.braid().turns(), kGeneratedTolerance);
    p += fmt::format("{:>5}{:>22}{:>14}\n", "n", "max b spread", "consistent");
    std::size_t k = 0;
    for (const ComparisonRow& row : rows) {
      if (row.count < 1) continue;
      const ConsistencyReport& c = original[k++];
      p += fmt::format("{:>5}{:>22.6g}{:>14}\n", row.count, c.max_relative_spread,
                       yes_no(c.consistent));
    }
    p += "Its force is not computed: the braid it describes cannot exist.\n";
  }

  int code = kExitOk;
  if (any_error) {
    code = kExitUsage;
  } else if (!relative_equal) {
    code = kExitVerificationFailed;
  }
  return {std::move(report), code};
}

CommandResult cmd_sweep(const RunConfig& config) {
  const std::vector<double> thetas = config.sweep.theta_values_deg();
  const std::vector<double> t_hats = config.sweep.t_hat_values();

  Report report;
  report.command = "sweep";
  report.inputs = {{"theta_min_deg", config.sweep.theta_min_deg},
                   {"theta_max_deg", config.sweep.theta_max_deg},
                   {"theta_points", static_cast<long long>(thetas.size())},
                   {"t_hat_min", config.sweep.t_hat_min},
                   {"t_hat_max", config.sweep.t_hat_max},
                   {"t_hat_points", static_cast<long long>(t_hats.size())}};
  report.columns = {"theta_deg", "t_hat", "F_hat", "zero_force_theta_deg"};

  std::vector<std::optional<double>> zero_angles;
  for (const double t_hat : t_hats) {
    zero_angles.push_back(t_hat < kMaxRelativeThickness
                              ? std::optional<double>(deg(zero_force_angle(t_hat)))
                              : std::nullopt);
  }

  std::vector<std::vector<double>> values(thetas.size(), std::vector<double>(t_hats.size()));
  for (std::size_t j = 0; j < t_hats.size(); ++j) {
    for (std::size_t i = 0; i < thetas.size(); ++i) {
      values[i][j] = normalized_force(units::radians(thetas[i]), t_hats[j]);
      report.rows.push_back({thetas[i], t_hats[j], values[i][j], optional_cell(zero_angles[j])});
    }
  }

  bool increasing = true;
  for (std::size_t j = 1; j < zero_angles.size(); ++j) {
    if (zero_angles[j] && zero_angles[j - 1] && t_hats[j] > t_hats[j - 1]) {
      increasing = increasing && *zero_angles[j] > *zero_angles[j - 1];
    }
  }
  report.verdicts = {{"zero_force_angle_increases_with_t_hat", increasing}};

  std::string& p = report.pretty;
  p += "Normalized force F_hat = F / (P' A) (tensile positive; -1 is a piston of equal area)\n";
  p += fmt::format("{:>10}", "theta\\t_hat");
  for (const double t : t_hats) p += fmt::format("{:>9.3g}", t);
  p += '\n';
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    p += fmt::format("{:>10.4g}", thetas[i]);
    for (const double v : values[i]) p += fmt::format("{:>9.4f}", v);
    p += '\n';
  }
  p += fmt::format("{:>10}", "F_hat=0 at");
  for (const auto& z : zero_angles) {
    p += z ? fmt::format("{:>9.3f}", *z) : fmt::format("{:>9}", "-");
  }
  p += "\n(zero-force braid angle in deg; at t_hat = 0.5 the force vanishes at every angle)\n";

  return {std::move(report), increasing ? kExitOk : kExitVerificationFailed};
}

CommandResult cmd_energy(const RunConfig& config) {
  const Unit unit = resolve_unit(config);
  const BraidSpec& braid = unit.resolution.braid;
  const StrokeSpec stroke(config.stroke_theta_1.value_or(unit.reference_theta),
                          config.stroke_theta_2);
  const GaugePressure pressure(config.pressure);

  const EnergyAudit single = audit(braid, stroke, pressure);
  const double dv_two_state = delta_volume_two_state(braid, stroke);
  const WorkIntegral work = work_integral(braid, stroke, pressure);
  const double minus_p_dv = -pressure.pascals() * single.delta_volume;
  const double volume_scale =
      std::max(volume_of(braid, stroke.theta_1()), volume_of(braid, stroke.theta_2()));
  const double identity_scale = pressure.pascals() * std::abs(single.delta_volume);
  const double identity_error = identity_scale > 0.0
                                    ? std::abs(work.value - minus_p_dv) / identity_scale
                                    : std::abs(work.value - minus_p_dv);
  const bool identity_ok =
      relative_gap(work.value, minus_p_dv, 1e-6 * pressure.pascals() * volume_scale) < 1e-9;
  const bool forms_agree =
      relative_gap(single.delta_volume, dv_two_state, 1e-6 * volume_scale) <= kEqualityTolerance;

  std::optional<double> thick_work;
  try {
    thick_work = work_integral_thick(braid, config.wall(), stroke, pressure).value;
  } catch (const DomainError&) {
  }

  Report report;
  report.command = "energy";
  add_unit_inputs(report, config);
  add_wall_inputs(report, config);
  report.inputs.emplace_back("theta1_deg", deg(stroke.theta_1()));
  report.inputs.emplace_back("theta2_deg", deg(stroke.theta_2()));
  report.inputs.emplace_back("pressure_kPa", kpa(config.pressure));

  report.columns = {"n",           "gamma",         "dV_unit_mm3",    "dV_unit_two_state_mm3",
                    "dL_mm",       "work_integral_J", "work_error_estimate_J", "minus_P_dV_J",
                    "identity_relative_error", "F_avg_unit_N", "E_in_unit_J", "E_out_unit_J",
                    "thick_work_integral_J",   "N_eq",         "dV_pack_mm3",  "dV_eq_mm3",
                    "volume_relative_gap",     "F_avg_pack_N", "F_avg_eq_N",   "pack_equals_eq"};

  bool packs_equal = true;
  bool any_error = false;
  std::vector<PackEnergyReport> packs;
  for (const int count : config.counts) {
    if (count < 1) {
      any_error = true;
      continue;
    }
    packs.push_back(pack_vs_equivalent_energy(braid, count, stroke, pressure));
    const PackEnergyReport& pr = packs.back();
    packs_equal = packs_equal && pr.equal;
    report.rows.push_back({static_cast<long long>(count), gamma_of(stroke), mm3(single.delta_volume),
                           mm3(dv_two_state), mm(single.delta_length), work.value,
                           work.error_estimate, minus_p_dv, identity_error, single.average_force,
                           single.energy_in, single.energy_out, optional_cell(thick_work),
                           pr.equivalent.turns(), mm3(pr.delta_volume_pack),
                           mm3(pr.delta_volume_equivalent), pr.relative_gap, pr.average_force_pack,
                           pr.average_force_equivalent, pr.equal});
  }
  if (any_error) throw DomainError("fascicle counts must be at least 1");

  report.verdicts = {{"delta_volume_forms_agree", forms_agree},
                     {"work_equals_minus_P_dV", identity_ok},
                     {"pack_equals_equivalent", packs_equal}};

  std::string& p = report.pretty;
  constexpr auto kRow = "  {:<34}{}\n";
  p += fmt::format("Stroke theta {:.3f} deg -> {:.3f} deg at P' = {:g} kPa (gamma = {:.6g})\n",
                   deg(stroke.theta_1()), deg(stroke.theta_2()), kpa(config.pressure),
                   gamma_of(stroke));
  p += "Single fascicle (thin wall, ideal, constant pressure)\n";
  p += fmt::format(kRow, "dV, gamma form", fmt::format("{:.6g} mm^3", mm3(single.delta_volume)));
  p += fmt::format(kRow, "dV, V2 - V1", fmt::format("{:.6g} mm^3", mm3(dv_two_state)));
  p += fmt::format(kRow, "dL", fmt::format("{:.6g} mm", mm(single.delta_length)));
  p += fmt::format(kRow, "integral of F_thin dL",
                   fmt::format("{:.9g} J (error estimate {:.2g} J)", work.value,
                               work.error_estimate));
  p += fmt::format(kRow, "-P' dV", fmt::format("{:.9g} J", minus_p_dv));
  p += fmt::format(kRow, "relative disagreement", fmt::format("{:.3g}", identity_error));
  p += fmt::format(kRow, "F_avg", fmt::format("{:.6g} N", single.average_force));
  p += fmt::format(kRow, "E_in = P' |dV|", fmt::format("{:.6g} J", single.energy_in));
  p += fmt::format(kRow, "E_out = |F_avg dL|", fmt::format("{:.6g} J", single.energy_out));
  p += fmt::format(kRow, fmt::format("thick-wall work, {}", wall_label(config)),
                   thick_work ? fmt::format("{:.6g} J (informational)", *thick_work)
                              : std::string("n/a (wall exceeds radius along the stroke)"));
  p += "Pack of n fascicles vs equivalent actuator\n";
  p += fmt::format("{:>5}{:>10}{:>16}{:>16}{:>14}{:>14}{:>8}\n", "n", "N_eq", "dV_pack[mm^3]",
                   "dV_eq[mm^3]", "F_avg,pack[N]", "F_avg,eq[N]", "equal");
  for (const PackEnergyReport& pr : packs) {
    p += fmt::format("{:>5}{:>10.5g}{:>16.8g}{:>16.8g}{:>14.6g}{:>14.6g}{:>8}\n", pr.count,
                     pr.equivalent.turns(), mm3(pr.delta_volume_pack),
                     mm3(pr.delta_volume_equivalent), pr.average_force_pack,
                     pr.average_force_equivalent, yes_no(pr.equal));
  }
  p += fmt::format("dV forms agree: {}; work equals -P' dV: {}; pack equals equivalent: {}\n",
                   yes_no(forms_agree), yes_no(identity_ok), yes_no(packs_equal));

  const bool ok = forms_agree && identity_ok && packs_equal;
  return {std::move(report), ok ? kExitOk : kExitVerificationFailed};
}

std::string render(const Report& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::kCsv:
      return to_csv(report);
    case OutputFormat::kJson:
      return to_json(report);
    case OutputFormat::kPretty:
      return report.pretty;
  }
  return report.pretty;
}

namespace {

struct Binding {
  std::string flag;
  std::string key;
  std::string help;
};

const std::map<std::string, std::vector<Binding>>& subcommand_bindings() {
  static const Binding kL{"--L", "L", "fascicle length, e.g. 145mm"};
  static const Binding kD{"--D", "D", "fascicle external diameter, e.g. 17mm"};
  static const Binding kN{"--N", "N", "fiber turns (dimensionless, may be fractional)"};
  static const Binding kTk{"--t-k", "t_k", "absolute wall thickness, e.g. 1mm"};
  static const Binding kThat{"--t-hat", "t_hat", "relative wall thickness t_k/D in [0, 0.5]"};
  static const Binding kP{"--pressure", "pressure", "gauge pressure, e.g. 1kPa"};
  static const Binding kCounts{"--n", "n", "fascicle counts, comma separated"};
  static const Binding kThetaRef{"--theta", "theta_ref",
                                 "braid angle to evaluate at (default: resolved angle)"};
  static const std::map<std::string, std::vector<Binding>> bindings{
      {"resolve",
       {kL, kD, kN, {"--theta", "theta", "measured braid angle to check (discarded on resolve)"}}},
      {"force", {kL, kD, kN, kThetaRef, kTk, kThat, kP}},
      {"compare",
       {kL, kD, kN, kThetaRef, kTk, kThat, kCounts,
        {"--policy", "policy", "primary equivalent wall policy: relative or absolute"}}},
      {"sweep",
       {{"--theta-min", "theta_min", "lowest braid angle, e.g. 30deg"},
        {"--theta-max", "theta_max", "highest braid angle (<= 90deg)"},
        {"--theta-count", "theta_count", "number of angles"},
        {"--theta-step", "theta_step", "angle step, e.g. 0.5deg"},
        {"--t-hat-min", "t_hat_min", "lowest relative wall thickness"},
        {"--t-hat-max", "t_hat_max", "highest relative wall thickness (<= 0.5)"},
        {"--t-hat-count", "t_hat_count", "number of thickness values"},
        {"--t-hat-step", "t_hat_step", "thickness step"}}},
      {"energy",
       {kL, kD, kN, kTk, kThat, kP, kCounts,
        {"--theta1", "theta1", "initial braid angle (default: resolved angle)"},
        {"--theta2", "theta2", "final braid angle (default 70deg)"}}},
  };
  return bindings;
}

CommandResult dispatch(const std::string& name, const RunConfig& config) {
  if (name == "resolve") return cmd_resolve(config);
  if (name == "force") return cmd_force(config);
  if (name == "compare") return cmd_compare(config);
  if (name == "sweep") return cmd_sweep(config);
  return cmd_energy(config);
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Braided pneumatic muscle model: kinematics, force laws, energy audit and "
               "fascicle-pack comparisons",
               "mckibben"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string format;
  std::string out_path;
  std::string tolerance;
  bool strict = false;
  app.add_option("--config", config_path, "key = value config file (units on every value)");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"pretty", "csv", "json"}));
  app.add_option("--out", out_path, "write output to PATH instead of stdout");
  app.add_flag("--strict", strict, "exit 1 when supplied parameters are inconsistent");
  app.add_option("--tolerance", tolerance, "relative consistency tolerance (default 1e-3)");

  const std::map<std::string, std::string> descriptions{
      {"resolve", "check L, D, theta, N for consistency and resolve b and theta"},
      {"force", "thin-wall, thick-wall and normalized force at one braid angle"},
      {"compare", "pack force vs equivalent actuators for each fascicle count"},
      {"sweep", "normalized force over a braid-angle / relative-thickness grid"},
      {"energy", "energy audit over a stroke, single fascicle and pack vs equivalent"},
  };

  std::map<std::string, std::map<std::string, std::string>> values;
  std::map<std::string, CLI::App*> subcommands;
  bool replicate = false;
  for (const auto& [name, bindings] : subcommand_bindings()) {
    CLI::App* sub = app.add_subcommand(name, descriptions.at(name));
    subcommands[name] = sub;
    for (const Binding& b : bindings) sub->add_option(b.flag, values[name][b.key], b.help);
    if (name == "compare") {
      sub->add_flag("--replicate-original-error", replicate,
                    "also check the equivalent built with N held fixed");
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  CLI::App* sub = subcommands.at(name);

  try {
    RunConfig config;
    if (!config_path.empty()) config = load_config(config_path);
    if (!format.empty()) config.set("format", format);
    if (!out_path.empty()) config.set("out", out_path);
    if (!tolerance.empty()) config.set("tolerance", tolerance);
    if (strict) config.set("strict", "true");
    for (const Binding& b : subcommand_bindings().at(name)) {
      if (sub->count(b.flag) > 0) config.set(b.key, values[name][b.key]);
    }
    if (replicate) config.set("replicate_original_error", "true");

    const CommandResult result = dispatch(name, config);
    const std::string text = render(result.report, config.format);
    if (config.out) {
      std::ofstream file(*config.out);
      if (!(file << text)) {
        err << "error: cannot write " << config.out->string() << '\n';
        return kExitUsage;
      }
    } else {
      out << text;
    }
    return result.exit_code;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
}

}  // namespace mckibben::cli
