#include "antipodal/geometry.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <string>

#include "antipodal/errors.hpp"

namespace antipodal {

double segment_distance(Point p, Point a, Point b) {
  const Point ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return distance(p, a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + t * ab);
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i].x) || !std::isfinite(points_[i].y)) {
      throw InvalidArgument("point " + std::to_string(i) + " has a non-finite coordinate");
    }
  }
}

PointSet PointSet::normalized(std::vector<Point> points) {
  PointSet ps(std::move(points));
  if (ps.size() >= 2) {
    const double diam = diameter(ps);
    if (diam > 1.0 + kDiameterSlack) {
      throw InvalidArgument("point set diameter " + std::to_string(diam) + " exceeds 1");
    }
  }
  ps.normalized_ = true;
  return ps;
}

ConvexPolygon ConvexPolygon::from_vertices(std::vector<Point> vertices) {
  const std::size_t n = vertices.size();
  if (n < 3) throw InvalidArgument("convex polygon needs at least 3 vertices");
  double perimeter = 0.0;
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = vertices[i];
    const Point b = vertices[(i + 1) % n];
    const Point c = vertices[(i + 2) % n];
    if (!(orient(a, b, c) > 0.0)) {
      throw InvalidArgument("polygon is not strictly convex and counterclockwise at vertex " +
                            std::to_string((i + 1) % n));
    }
    perimeter += distance(a, b);
    turning += std::atan2(cross(b - a, c - b), dot(b - a, c - b));
  }
  // A star polygon turns left everywhere but winds more than once.
  if (std::abs(turning - 2.0 * std::numbers::pi) > 1e-6) {
    throw InvalidArgument("polygon winds more than once");
  }
  return ConvexPolygon(std::move(vertices), perimeter);
}

double ConvexPolygon::boundary_distance(Point p) const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    best = std::min(best, segment_distance(p, edge_start(i), edge_end(i)));
  }
  return best;
}

bool ConvexPolygon::contains(Point p, double tol) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (orient(edge_start(i), edge_end(i), p) < -tol) return false;
  }
  return true;
}

void validate_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    throw InvalidArgument("epsilon must lie in (0, 1/2), got " + std::to_string(epsilon));
  }
}

PairCounts pair_counts(const PointSet& ps, double epsilon) {
  validate_epsilon(epsilon);
  if (ps.size() < 2) throw InvalidArgument("pair counting needs at least 2 points");

  const auto pts = ps.points();
  const double far = 1.0 - epsilon;
  PairCounts counts{.neighbors = 0, .antipodes = 0, .epsilon = epsilon};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Point p = pts[i];
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double dist = distance(p, pts[j]);
      counts.neighbors += dist <= epsilon;
      counts.antipodes += dist >= far;
    }
  }
  return counts;
}

namespace {

std::vector<Point> hull_vertices(std::span<const Point> input) {
  std::vector<Point> pts(input.begin(), input.end());
  std::sort(pts.begin(), pts.end(), [](Point a, Point b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;

  std::vector<Point> hull(2 * pts.size());
  std::size_t m = 0;
  for (const Point p : pts) {
    while (m >= 2 && orient(hull[m - 2], hull[m - 1], p) <= 0.0) --m;
    hull[m++] = p;
  }
  const std::size_t lower = m + 1;
  for (std::size_t i = pts.size() - 1; i-- > 0;) {
    const Point p = pts[i];
    while (m >= lower && orient(hull[m - 2], hull[m - 1], p) <= 0.0) --m;
    hull[m++] = p;
  }
  hull.resize(m - 1);
  return hull;
}

double calipers(std::span<const Point> hull) {
  const std::size_t n = hull.size();
  double best = 0.0;
  std::size_t j = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t ni = (i + 1) % n;
    while (std::abs(orient(hull[i], hull[ni], hull[(j + 1) % n])) >
           std::abs(orient(hull[i], hull[ni], hull[j]))) {
      j = (j + 1) % n;
    }
    best = std::max({best, distance(hull[i], hull[j]), distance(hull[ni], hull[j]),
                     distance(hull[i], hull[(j + 1) % n])});
  }
  return best;
}

}  // namespace

double diameter(const PointSet& ps) {
  if (ps.size() < 2) throw InvalidArgument("diameter needs at least 2 points");
  const auto hull = hull_vertices(ps.points());
  if (hull.size() == 1) return 0.0;
  // Collinear input collapses to its two extremes.
  if (hull.size() == 2) return distance(hull[0], hull[1]);
  return calipers(hull);
}

ConvexPolygon convex_hull(const PointSet& ps) {
  if (ps.size() < 3) throw InvalidArgument("convex hull needs at least 3 points");
  auto hull = hull_vertices(ps.points());
  if (hull.size() < 3) throw DegenerateHull("all input points are collinear");
  return ConvexPolygon::from_vertices(std::move(hull));
}

PointSet boundary_band(const PointSet& ps, const ConvexPolygon& hull, double epsilon) {
  std::vector<Point> kept;
  for (const Point p : ps) {
    if (hull.boundary_distance(p) <= epsilon) kept.push_back(p);
  }
  return PointSet(std::move(kept));
}

double ratio_margin(const PairCounts& counts) {
  validate_epsilon(counts.epsilon);
  if (counts.antipodes == 0) {
    throw VacuousRatio("no antipodal pairs; the inequality holds trivially");
  }
  const double eps = counts.epsilon;
  return static_cast<double>(counts.neighbors) * std::sqrt(std::log(1.0 / eps)) /
         (static_cast<double>(counts.antipodes) * std::sqrt(eps));
}

}  // namespace antipodal
