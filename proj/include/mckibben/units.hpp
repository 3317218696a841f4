#pragma once

// Unit boundary: text such as "145 mm", "80.369deg" or "1 kPa" in, SI out.
// Everything behind this layer works in m, rad, Pa and N.

#include <numbers>
#include <string>
#include <string_view>

namespace mckibben::units {

enum class Dimension { kLength, kAngle, kPressure, kDimensionless };

// Parses "<number>[ ]<unit>". Dimensional quantities must carry one of
// m/mm (length), rad/deg (angle) or Pa/kPa (pressure); dimensionless values
// must not carry a unit. Parsing is locale independent. Throws DomainError.
double parse(std::string_view text, Dimension dimension);

// Parses an angle and returns it in degrees (degree input is passed through
// untouched so grid endpoints such as 90 deg stay exact).
double parse_degrees(std::string_view text);

// Shortest text that parses back to exactly `si`, with the SI unit suffix.
std::string format_si(double si, Dimension dimension);

// Locale-independent, shortest round-trip representation of a double.
std::string repr(double value);

inline double degrees(double radians) { return radians / std::numbers::pi * 180.0; }
// Divides first so that 90 deg maps exactly onto pi/2.
inline double radians(double degrees) { return degrees / 180.0 * std::numbers::pi; }

inline constexpr double kMillimetre = 1e-3;
inline constexpr double kKilopascal = 1e3;

}  // namespace mckibben::units
