#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace antipodal {

/// Absolute tolerance for geometric equality on coordinates in [-1, 1].
inline constexpr double kGeomTol = 1e-12;

/// Slack allowed on diameter-1 configurations.
inline constexpr double kDiameterSlack = 1e-9;

struct Point {
  double x{0.0};
  double y{0.0};

  friend constexpr bool operator==(const Point&, const Point&) = default;
};

constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
constexpr Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }

constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }

/// Orientation of the turn o -> a -> b; positive when counterclockwise.
constexpr double orient(Point o, Point a, Point b) { return cross(a - o, b - o); }

inline double norm(Point p) { return std::sqrt(dot(p, p)); }
inline double distance(Point a, Point b) { return norm(a - b); }

/// Distance from p to the closed segment [a, b].
double segment_distance(Point p, Point a, Point b);

/// Finite planar point list. A set built through `normalized()` carries a
/// certificate that its diameter is at most 1 + kDiameterSlack.
class PointSet {
 public:
  PointSet() = default;

  /// Throws InvalidArgument on non-finite coordinates.
  explicit PointSet(std::vector<Point> points);

  /// Validates finiteness and diameter <= 1 + kDiameterSlack.
  static PointSet normalized(std::vector<Point> points);

  std::span<const Point> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  bool is_normalized() const noexcept { return normalized_; }

  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

 private:
  std::vector<Point> points_;
  bool normalized_{false};
};

/// Strictly convex polygon, vertices counterclockwise, collinear vertices pruned.
class ConvexPolygon {
 public:
  /// Validates strict convexity and counterclockwise order of `vertices`.
  static ConvexPolygon from_vertices(std::vector<Point> vertices);

  std::span<const Point> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  double perimeter() const noexcept { return perimeter_; }

  /// Edge i runs from vertex i to vertex (i + 1) mod size.
  Point edge_start(std::size_t i) const { return vertices_[i]; }
  Point edge_end(std::size_t i) const { return vertices_[(i + 1) % vertices_.size()]; }

  /// Minimum distance from p to the polygon boundary.
  double boundary_distance(Point p) const;

  /// True when p lies inside or on the boundary, with `tol` slack on edge orientation.
  bool contains(Point p, double tol = kGeomTol) const;

 private:
  ConvexPolygon(std::vector<Point> vertices, double perimeter)
      : vertices_(std::move(vertices)), perimeter_(perimeter) {}

  std::vector<Point> vertices_;
  double perimeter_{0.0};
};

struct PairCounts {
  std::uint64_t neighbors{0};  // pairs at distance <= epsilon
  std::uint64_t antipodes{0};  // pairs at distance >= 1 - epsilon
  double epsilon{0.0};
};

/// Throws InvalidArgument unless 0 < epsilon < 1/2.
void validate_epsilon(double epsilon);

/// Exact O(n^2) count of epsilon-neighbors and epsilon-antipodes. Both
/// thresholds are inclusive.
PairCounts pair_counts(const PointSet& ps, double epsilon);

/// Maximum pairwise distance. Rotating calipers over the hull; falls back to
/// the extreme pair for collinear input.
double diameter(const PointSet& ps);

/// Andrew's monotone chain. Throws DegenerateHull when all points are
/// collinear (or coincide) and InvalidArgument for fewer than 3 points.
ConvexPolygon convex_hull(const PointSet& ps);

/// Points of `ps` within `epsilon` of the boundary of `hull`.
PointSet boundary_band(const PointSet& ps, const ConvexPolygon& hull, double epsilon);

/// neighbors * sqrt(log(1/eps)) / (antipodes * sqrt(eps)): the value of the
/// universal constant this configuration allows. Throws VacuousRatio when
/// antipodes == 0.
double ratio_margin(const PairCounts& counts);

}  // namespace antipodal
