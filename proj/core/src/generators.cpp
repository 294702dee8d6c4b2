#include "antipodal/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "antipodal/errors.hpp"

namespace antipodal {

namespace {

constexpr double kPi = std::numbers::pi;

void require_points(std::size_t n) {
  if (n < 2) throw InvalidArgument("generators need n >= 2, got " + std::to_string(n));
}

// Uniform double in [0, 1) from the top 53 bits of one engine draw.
double unit_double(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

}  // namespace

std::string_view to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::circle:
      return "circle";
    case GeneratorKind::arc_center:
      return "arc-center";
    case GeneratorKind::random_disk:
      return "random-disk";
    case GeneratorKind::reuleaux_boundary:
      return "reuleaux";
  }
  return "unknown";
}

std::optional<GeneratorKind> parse_generator_kind(std::string_view name) {
  for (auto kind : {GeneratorKind::circle, GeneratorKind::arc_center, GeneratorKind::random_disk,
                    GeneratorKind::reuleaux_boundary}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

void validate(const GeneratorSpec& spec) {
  require_points(spec.n);
  if (spec.kind == GeneratorKind::arc_center) {
    validate_epsilon(spec.epsilon);
    if (arc_center_cluster_size(spec.n, spec.epsilon) == 0) {
      throw InvalidArgument("arc-center configuration is empty: floor(sqrt(eps) * n) = 0");
    }
  }
}

PointSet circle_config(std::size_t n) {
  require_points(n);
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t t = 0; t < n; ++t) {
    const double angle = 2.0 * kPi * static_cast<double>(t) / static_cast<double>(n);
    pts.push_back({0.5 * std::cos(angle), 0.5 * std::sin(angle)});
  }
  return PointSet::normalized(std::move(pts));
}

std::size_t arc_center_cluster_size(std::size_t n, double epsilon) {
  validate_epsilon(epsilon);
  // The relative nudge keeps exact products such as sqrt(0.04) * 100 from
  // rounding down to 19.
  return static_cast<std::size_t>(
      std::floor(std::sqrt(epsilon) * static_cast<double>(n) * (1.0 + 1e-12)));
}

PointSet arc_center_config(std::size_t n, double epsilon) {
  require_points(n);
  const std::size_t m = arc_center_cluster_size(n, epsilon);
  if (m == 0) throw InvalidArgument("arc-center configuration is empty: floor(sqrt(eps) * n) = 0");

  const auto cols = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(m))));
  const std::size_t rows = (m + cols - 1) / cols;
  const double pitch = std::min(epsilon / 100.0, epsilon / (4.0 * static_cast<double>(cols)));
  const double half_height = 0.5 * static_cast<double>(rows - 1) * pitch;
  // Inside the cone |y| <= x tan(pi/6) every arc point is within distance 1.
  const double x0 = 2.0 * half_height / std::sqrt(3.0) + epsilon / 20.0;

  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t t = 0; t < m; ++t) {
    pts.push_back({x0 + static_cast<double>(t % cols) * pitch,
                   -half_height + static_cast<double>(t / cols) * pitch});
  }

  const std::size_t on_arc = n - m;
  for (std::size_t t = 0; t < on_arc; ++t) {
    const double angle =
        on_arc == 1 ? 0.0
                    : -kPi / 6.0 + static_cast<double>(t) * (kPi / 3.0) /
                                       static_cast<double>(on_arc - 1);
    pts.push_back({std::cos(angle), std::sin(angle)});
  }
  return PointSet::normalized(std::move(pts));
}

PointSet random_disk_config(std::size_t n, std::uint64_t seed) {
  require_points(n);
  std::mt19937_64 engine(seed);
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t t = 0; t < n; ++t) {
    const double r = 0.5 * std::sqrt(unit_double(engine));
    const double angle = 2.0 * kPi * unit_double(engine);
    pts.push_back({r * std::cos(angle), r * std::sin(angle)});
  }
  return PointSet::normalized(std::move(pts));
}

PointSet reuleaux_boundary_config(std::size_t n, std::uint64_t seed) {
  require_points(n);
  // Equilateral triangle of side 1 centered at the origin. Arc i is centered
  // at vertex i and joins the other two vertices; each arc has length pi/3.
  const double circumradius = 1.0 / std::sqrt(3.0);
  std::array<Point, 3> vertex{};
  for (std::size_t i = 0; i < 3; ++i) {
    const double a = kPi / 2.0 + 2.0 * kPi * static_cast<double>(i) / 3.0;
    vertex[i] = {circumradius * std::cos(a), circumradius * std::sin(a)};
  }
  std::array<double, 3> start_angle{};
  for (std::size_t i = 0; i < 3; ++i) {
    const Point to_next = vertex[(i + 1) % 3] - vertex[i];
    start_angle[i] = std::atan2(to_next.y, to_next.x);
  }

  std::mt19937_64 engine(seed);
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t t = 0; t < n; ++t) {
    const double s = kPi * unit_double(engine);
    const auto arc = std::min<std::size_t>(static_cast<std::size_t>(s / (kPi / 3.0)), 2);
    const double angle = start_angle[arc] + (s - static_cast<double>(arc) * kPi / 3.0);
    pts.push_back(vertex[arc] + Point{std::cos(angle), std::sin(angle)});
  }
  return PointSet::normalized(std::move(pts));
}

PointSet generate(const GeneratorSpec& spec) {
  validate(spec);
  switch (spec.kind) {
    case GeneratorKind::circle:
      return circle_config(spec.n);
    case GeneratorKind::arc_center:
      return arc_center_config(spec.n, spec.epsilon);
    case GeneratorKind::random_disk:
      return random_disk_config(spec.n, spec.seed);
    case GeneratorKind::reuleaux_boundary:
      return reuleaux_boundary_config(spec.n, spec.seed);
  }
  throw InvalidArgument("unknown generator kind");
}

}  // namespace antipodal
