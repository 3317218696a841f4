#include "mckibben/units.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

#include <fmt/format.h>

#include "mckibben/errors.hpp"

namespace mckibben::units {

namespace {

struct Split {
  double number;
  std::string_view unit;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

Split split(std::string_view text) {
  const std::string_view s = trim(text);
  double number = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), number);
  if (ec != std::errc{} || ptr == s.data()) {
    throw DomainError(fmt::format("'{}' does not start with a number", text));
  }
  if (!std::isfinite(number)) throw DomainError(fmt::format("'{}' is not finite", text));
  return {number, trim(std::string_view(ptr, s.data() + s.size() - ptr))};
}

[[noreturn]] void bad_unit(std::string_view text, std::string_view expected) {
  throw DomainError(fmt::format("'{}' needs a unit of {}", text, expected));
}

}  // namespace

double parse(std::string_view text, Dimension dimension) {
  const auto [number, unit] = split(text);
  switch (dimension) {
    case Dimension::kLength:
      if (unit == "m") return number;
      if (unit == "mm") return number * kMillimetre;
      bad_unit(text, "length (m or mm)");
    case Dimension::kAngle:
      if (unit == "rad") return number;
      if (unit == "deg") return radians(number);
      bad_unit(text, "angle (rad or deg)");
    case Dimension::kPressure:
      if (unit == "Pa") return number;
      if (unit == "kPa") return number * kKilopascal;
      bad_unit(text, "pressure (Pa or kPa)");
    case Dimension::kDimensionless:
      if (unit.empty()) return number;
      throw DomainError(fmt::format("'{}' is dimensionless and takes no unit", text));
  }
  throw DomainError("unknown dimension");
}

double parse_degrees(std::string_view text) {
  const auto [number, unit] = split(text);
  if (unit == "deg") return number;
  if (unit == "rad") return degrees(number);
  bad_unit(text, "angle (rad or deg)");
}

std::string repr(double value) { return fmt::format("{}", value); }

std::string format_si(double si, Dimension dimension) {
  switch (dimension) {
    case Dimension::kLength:
      return repr(si) + " m";
    case Dimension::kAngle:
      return repr(si) + " rad";
    case Dimension::kPressure:
      return repr(si) + " Pa";
    case Dimension::kDimensionless:
      return repr(si);
  }
  return repr(si);
}

}  // namespace mckibben::units
