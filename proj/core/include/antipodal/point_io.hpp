#pragma once

#include <filesystem>
#include <iosfwd>

#include "antipodal/geometry.hpp"

namespace antipodal {

// Point-set text format: one point per line, `x y` separated by a single
// space. Lines starting with '#' are comments. No header.

/// Throws ParseError with the offending line number on malformed input.
PointSet read_points(std::istream& in);
PointSet read_points(const std::filesystem::path& path);

/// Writes coordinates in fixed notation with the shortest round-trip digits.
void write_points(std::ostream& out, const PointSet& ps);
void write_points(const std::filesystem::path& path, const PointSet& ps);

}  // namespace antipodal
