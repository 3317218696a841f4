#include "mckibben/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "mckibben/errors.hpp"
#include "mckibben/units.hpp"

namespace mckibben {

namespace {

using units::Dimension;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

int parse_int(std::string_view text) {
  const std::string_view s = trim(text);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw DomainError(fmt::format("'{}' is not an integer", text));
  }
  return value;
}

bool parse_bool(std::string_view text) {
  const std::string_view s = trim(text);
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw DomainError(fmt::format("'{}' is not a boolean", text));
}

std::vector<int> parse_counts(std::string_view text) {
  std::vector<int> counts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    counts.push_back(parse_int(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return counts;
}

std::vector<double> axis(double lo, double hi, std::optional<int> count, std::optional<double> step,
                         std::string_view name) {
  if (!(lo <= hi)) throw DomainError(fmt::format("{} range is empty ({} > {})", name, lo, hi));
  std::vector<double> values;
  if (step) {
    if (!(*step > 0.0)) throw DomainError(fmt::format("{} step must be positive", name));
    const auto intervals = static_cast<long>(std::floor((hi - lo) / *step + 1e-9));
    if (intervals > 1'000'000) throw DomainError(fmt::format("{} grid is too large", name));
    for (long i = 0; i <= intervals; ++i) values.push_back(lo + static_cast<double>(i) * *step);
  } else {
    const int n = count.value_or(0);
    if (n < 1) throw DomainError(fmt::format("{} grid needs at least one point", name));
    if (n == 1 || lo == hi) return {lo};
    for (int i = 0; i < n; ++i) {
      values.push_back(i == n - 1 ? hi : lo + (hi - lo) * i / (n - 1));
    }
  }
  return values;
}

}  // namespace

std::vector<double> SweepGrid::theta_values_deg() const {
  if (!(theta_min_deg > 0.0 && theta_max_deg <= 90.0)) {
    throw DomainError(fmt::format("sweep angles must lie in (0, 90] deg, got [{}, {}]",
                                  theta_min_deg, theta_max_deg));
  }
  return axis(theta_min_deg, theta_max_deg, theta_count, theta_step_deg, "theta");
}

std::vector<double> SweepGrid::t_hat_values() const {
  if (!(t_hat_min >= 0.0 && t_hat_max <= kMaxRelativeThickness)) {
    throw DomainError(
        fmt::format("sweep t_hat must lie in [0, 0.5], got [{}, {}]", t_hat_min, t_hat_max));
  }
  return axis(t_hat_min, t_hat_max, t_hat_count, t_hat_step, "t_hat");
}

const std::vector<std::string_view>& config_keys() {
  static const std::vector<std::string_view> keys{
      "L",         "D",         "N",           "theta",       "theta_ref",   "t_k",
      "t_hat",     "pressure",  "n",           "policy",      "theta1",      "theta2",
      "theta_min", "theta_max", "theta_count", "theta_step",  "t_hat_min",   "t_hat_max",
      "t_hat_count", "t_hat_step", "format",   "out",         "strict",      "tolerance",
      "replicate_original_error"};
  return keys;
}

void RunConfig::set(std::string_view key, std::string_view raw) {
  const std::string_view value = trim(raw);
  if (key == "L") {
    length = units::parse(value, Dimension::kLength);
  } else if (key == "D") {
    diameter = units::parse(value, Dimension::kLength);
  } else if (key == "N") {
    turns = units::parse(value, Dimension::kDimensionless);
  } else if (key == "theta") {
    measured_theta = units::parse(value, Dimension::kAngle);
  } else if (key == "theta_ref") {
    reference_theta = units::parse(value, Dimension::kAngle);
  } else if (key == "t_k") {
    wall_thickness = units::parse(value, Dimension::kLength);
    relative_wall_thickness.reset();
  } else if (key == "t_hat") {
    relative_wall_thickness = units::parse(value, Dimension::kDimensionless);
    wall_thickness.reset();
  } else if (key == "pressure") {
    pressure = units::parse(value, Dimension::kPressure);
  } else if (key == "n") {
    counts = parse_counts(value);
  } else if (key == "policy") {
    if (value == "relative") {
      policy = ThicknessPolicy::kRelative;
    } else if (value == "absolute") {
      policy = ThicknessPolicy::kAbsolute;
    } else {
      throw DomainError(fmt::format("policy '{}' must be 'relative' or 'absolute'", value));
    }
  } else if (key == "theta1") {
    stroke_theta_1 = units::parse(value, Dimension::kAngle);
  } else if (key == "theta2") {
    stroke_theta_2 = units::parse(value, Dimension::kAngle);
  } else if (key == "theta_min") {
    sweep.theta_min_deg = units::parse_degrees(value);
  } else if (key == "theta_max") {
    sweep.theta_max_deg = units::parse_degrees(value);
  } else if (key == "theta_count") {
    sweep.theta_count = parse_int(value);
    sweep.theta_step_deg.reset();
  } else if (key == "theta_step") {
    sweep.theta_step_deg = units::parse_degrees(value);
    sweep.theta_count.reset();
  } else if (key == "t_hat_min") {
    sweep.t_hat_min = units::parse(value, Dimension::kDimensionless);
  } else if (key == "t_hat_max") {
    sweep.t_hat_max = units::parse(value, Dimension::kDimensionless);
  } else if (key == "t_hat_count") {
    sweep.t_hat_count = parse_int(value);
    sweep.t_hat_step.reset();
  } else if (key == "t_hat_step") {
    sweep.t_hat_step = units::parse(value, Dimension::kDimensionless);
    sweep.t_hat_count.reset();
  } else if (key == "format") {
    if (value == "pretty") {
      format = OutputFormat::kPretty;
    } else if (value == "csv") {
      format = OutputFormat::kCsv;
    } else if (value == "json") {
      format = OutputFormat::kJson;
    } else {
      throw DomainError(fmt::format("format '{}' must be pretty, csv or json", value));
    }
  } else if (key == "out") {
    if (value.empty()) throw DomainError("out needs a path");
    out = std::filesystem::path(std::string(value));
  } else if (key == "strict") {
    strict = parse_bool(value);
  } else if (key == "tolerance") {
    tolerance = units::parse(value, Dimension::kDimensionless);
    if (!(tolerance > 0.0)) throw DomainError("tolerance must be positive");
  } else if (key == "replicate_original_error") {
    replicate_original_error = parse_bool(value);
  } else {
    throw DomainError(fmt::format("unknown configuration key '{}'", key));
  }
}

WallSpec RunConfig::wall() const {
  if (relative_wall_thickness) return WallSpec::relative(*relative_wall_thickness);
  return WallSpec::absolute(wall_thickness.value_or(0.0));
}

std::string RunConfig::to_text() const {
  using units::format_si;
  std::ostringstream os;
  os << "L = " << format_si(length, Dimension::kLength) << '\n';
  os << "D = " << format_si(diameter, Dimension::kLength) << '\n';
  os << "N = " << format_si(turns, Dimension::kDimensionless) << '\n';
  if (measured_theta) os << "theta = " << format_si(*measured_theta, Dimension::kAngle) << '\n';
  if (reference_theta) {
    os << "theta_ref = " << format_si(*reference_theta, Dimension::kAngle) << '\n';
  }
  if (relative_wall_thickness) {
    os << "t_hat = " << format_si(*relative_wall_thickness, Dimension::kDimensionless) << '\n';
  } else if (wall_thickness) {
    os << "t_k = " << format_si(*wall_thickness, Dimension::kLength) << '\n';
  }
  os << "pressure = " << format_si(pressure, Dimension::kPressure) << '\n';
  os << "n = " << fmt::format("{}", fmt::join(counts, ",")) << '\n';
  os << "policy = " << to_string(policy) << '\n';
  if (stroke_theta_1) os << "theta1 = " << format_si(*stroke_theta_1, Dimension::kAngle) << '\n';
  os << "theta2 = " << format_si(stroke_theta_2, Dimension::kAngle) << '\n';
  os << "theta_min = " << units::repr(sweep.theta_min_deg) << " deg\n";
  os << "theta_max = " << units::repr(sweep.theta_max_deg) << " deg\n";
  if (sweep.theta_step_deg) {
    os << "theta_step = " << units::repr(*sweep.theta_step_deg) << " deg\n";
  } else if (sweep.theta_count) {
    os << "theta_count = " << *sweep.theta_count << '\n';
  }
  os << "t_hat_min = " << units::repr(sweep.t_hat_min) << '\n';
  os << "t_hat_max = " << units::repr(sweep.t_hat_max) << '\n';
  if (sweep.t_hat_step) {
    os << "t_hat_step = " << units::repr(*sweep.t_hat_step) << '\n';
  } else if (sweep.t_hat_count) {
    os << "t_hat_count = " << *sweep.t_hat_count << '\n';
  }
  os << "format = " << to_string(format) << '\n';
  if (out) os << "out = " << out->string() << '\n';
  os << "strict = " << (strict ? "true" : "false") << '\n';
  os << "tolerance = " << units::repr(tolerance) << '\n';
  os << "replicate_original_error = " << (replicate_original_error ? "true" : "false") << '\n';
  return os.str();
}

RunConfig parse_config(std::string_view text, RunConfig base) {
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    const auto end = text.find('\n', start);
    std::string_view line = text.substr(start, end == text.npos ? text.npos : end - start);
    start = end == text.npos ? text.size() : end + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != line.npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == line.npos) {
      throw DomainError(fmt::format("config line {}: expected 'key = value'", line_no));
    }
    const std::string_view key = trim(line.substr(0, eq));
    if (!seen.insert(std::string(key)).second) {
      throw DomainError(fmt::format("config line {}: key '{}' repeated", line_no, key));
    }
    try {
      base.set(key, line.substr(eq + 1));
    } catch (const DomainError& e) {
      throw DomainError(fmt::format("config line {}: {}", line_no, e.what()));
    }
  }
  return base;
}

RunConfig load_config(const std::filesystem::path& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw DomainError(fmt::format("cannot read config file '{}'", path.string()));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), std::move(base));
}

std::string_view to_string(ThicknessPolicy policy) {
  return policy == ThicknessPolicy::kRelative ? "relative" : "absolute";
}

std::string_view to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::kPretty:
      return "pretty";
    case OutputFormat::kCsv:
      return "csv";
    case OutputFormat::kJson:
      return "json";
  }
  return "pretty";
}

}  // namespace mckibben
