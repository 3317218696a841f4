#pragma once

// Run configuration shared by every CLI subcommand.
//
// File format: one `key = value` per line, `#` starts a comment, blank lines
// are ignored. Every dimensional value carries its unit ("145 mm",
// "80.369 deg", "1 kPa"). Unknown or repeated keys are errors. Command-line
// flags are applied through the same key table after the file, so they win.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mckibben/fascicle_compare.hpp"

namespace mckibben {

enum class OutputFormat { kPretty, kCsv, kJson };

// Inclusive grid over braid angle (degrees) and relative wall thickness.
// Each axis is given either by a point count or by a step.
struct SweepGrid {
  double theta_min_deg = 30.0;
  double theta_max_deg = 90.0;
  std::optional<int> theta_count = 61;
  std::optional<double> theta_step_deg;
  double t_hat_min = 0.0;
  double t_hat_max = 0.5;
  std::optional<int> t_hat_count = 11;
  std::optional<double> t_hat_step;

  // Validates the grid (throws DomainError) and returns the axis values.
  std::vector<double> theta_values_deg() const;
  std::vector<double> t_hat_values() const;
};

struct RunConfig {
  // Fascicle as measured (SI). Defaults are the reference fascicle.
  double length = 0.145;
  double diameter = 0.017;
  double turns = 16.0;
  // Angle reported alongside L, D and N; only checked, never trusted.
  std::optional<double> measured_theta;
  // Angle at which force/compare evaluate; defaults to the resolved angle.
  std::optional<double> reference_theta;
  // Exactly one of these describes the fascicle wall.
  std::optional<double> wall_thickness = 1e-3;
  std::optional<double> relative_wall_thickness;
  double pressure = 1e3;
  std::vector<int> counts{1, 2, 4, 8, 16, 32, 64};
  ThicknessPolicy policy = ThicknessPolicy::kRelative;
  // Stroke for the energy audit; theta1 defaults to the resolved angle.
  std::optional<double> stroke_theta_1;
  double stroke_theta_2 = 70.0 / 180.0 * std::numbers::pi;
  SweepGrid sweep;

  OutputFormat format = OutputFormat::kPretty;
  std::optional<std::filesystem::path> out;
  bool strict = false;
  double tolerance = kMeasuredTolerance;
  bool replicate_original_error = false;

  // Applies one key. Throws DomainError for unknown keys or bad values.
  void set(std::string_view key, std::string_view value);

  WallSpec wall() const;

  // Serializes every setting in SI with round-trip precision.
  std::string to_text() const;
};

// Parses config text on top of `base`. Throws DomainError with the line
// number on any problem.
RunConfig parse_config(std::string_view text, RunConfig base = {});
RunConfig load_config(const std::filesystem::path& path, RunConfig base = {});

// Keys accepted by RunConfig::set, in documentation order.
const std::vector<std::string_view>& config_keys();

std::string_view to_string(ThicknessPolicy policy);
std::string_view to_string(OutputFormat format);

}  // namespace mckibben
