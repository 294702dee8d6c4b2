#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "antipodal/geometry.hpp"

namespace antipodal {

enum class GeneratorKind { circle, arc_center, random_disk, reuleaux_boundary };

/// CLI spelling: circle, arc-center, random-disk, reuleaux.
std::string_view to_string(GeneratorKind kind);
std::optional<GeneratorKind> parse_generator_kind(std::string_view name);

struct GeneratorSpec {
  GeneratorKind kind{GeneratorKind::circle};
  std::size_t n{0};
  double epsilon{0.0};     // arc_center only
  std::uint64_t seed{0};   // randomized kinds only

  /// Whether the constructed points depend on `epsilon`.
  bool depends_on_epsilon() const noexcept { return kind == GeneratorKind::arc_center; }
};

/// Throws InvalidArgument when the spec violates its kind's preconditions.
void validate(const GeneratorSpec& spec);

/// n points at angles 2*pi*t/n on the circle of radius 1/2 about the origin.
PointSet circle_config(std::size_t n);

/// Number of center points floor(sqrt(eps) * n) used by `arc_center_config`.
std::size_t arc_center_cluster_size(std::size_t n, double epsilon);

/// floor(sqrt(eps) n) points clustered at the center of a radius-1 arc of
/// angular width pi/3 (centered on the positive x-axis), and the remaining
/// points evenly spaced on the closed arc.
///
/// The cluster sits on a square micro-grid of pitch min(eps/100, eps/(4 cols))
/// so no two points coincide. It is offset toward the arc by just enough that
/// every center-to-arc distance stays <= 1, keeping the diameter at 1 while
/// each center point remains an eps-antipode of every arc point.
PointSet arc_center_config(std::size_t n, double epsilon);

/// n points i.i.d. uniform in the closed disk of diameter 1 centered at the
/// origin. Uses std::mt19937_64 seeded with `seed`; doubles are taken from the
/// top 53 bits so the output is identical on every conforming platform.
PointSet random_disk_config(std::size_t n, std::uint64_t seed);

/// n points uniform by arc length on the boundary of the width-1 Reuleaux
/// triangle, same generator as `random_disk_config`.
PointSet reuleaux_boundary_config(std::size_t n, std::uint64_t seed);

PointSet generate(const GeneratorSpec& spec);

}  // namespace antipodal
