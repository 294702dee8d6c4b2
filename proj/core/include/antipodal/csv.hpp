#pragma once

#include <optional>
#include <string>

namespace antipodal {

/// Shortest round-trip decimal form of `value`, independent of the C locale.
std::string format_real(double value);

/// As `format_real`, but never uses exponent notation.
std::string format_fixed(double value);

/// Empty string for a missing value.
std::string format_optional(const std::optional<double>& value);

}  // namespace antipodal
