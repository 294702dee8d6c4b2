#include "antipodal/annuli.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "antipodal/errors.hpp"

namespace antipodal {

namespace {

double checked_sqrt(double radicand, const char* what) {
  if (radicand < -kRadicandClamp) {
    throw NegativeRadicand(std::string(what) + " radicand is negative: " +
                           std::to_string(radicand));
  }
  return std::sqrt(std::max(radicand, 0.0));
}

// Two equal annuli of radii (inner, outer) at (-d/2, 0) and (d/2, 0).
struct PairGeometry {
  double d;
  double inner;
  double outer;

  // Height of a circle of radius r about (cx, 0) at abscissa x, clamped at 0.
  static double arc_height(double r, double cx, double x) {
    const double dx = x - cx;
    return std::sqrt(std::max(r * r - dx * dx, 0.0));
  }

  double top(double x) const {
    return std::min(arc_height(outer, -d / 2.0, x), arc_height(outer, d / 2.0, x));
  }
  double bottom(double x) const {
    return std::max(arc_height(inner, -d / 2.0, x), arc_height(inner, d / 2.0, x));
  }

  bool contains(Point p) const {
    if (p.y < 0.0) return false;
    const double r0 = distance(p, {-d / 2.0, 0.0});
    const double r1 = distance(p, {d / 2.0, 0.0});
    return r0 >= inner && r0 <= outer && r1 >= inner && r1 <= outer;
  }

  // x of the side corner, where the left outer circle meets the right inner one.
  double side_x() const { return (outer * outer - inner * inner) / (2.0 * d); }
};

std::size_t rasterize(const PairGeometry& g, double cell) {
  const double half_width = g.side_x();
  const double y_top = PairGeometry::arc_height(g.outer, g.d / 2.0, 0.0);
  const double y_low = std::min(PairGeometry::arc_height(g.inner, g.d / 2.0, 0.0),
                                PairGeometry::arc_height(g.outer, -g.d / 2.0, half_width));

  // One cell of padding on every side of the corner bounding box.
  const auto i0 = static_cast<long>(std::floor(-half_width / cell)) - 1;
  const auto i1 = static_cast<long>(std::ceil(half_width / cell)) + 1;
  const auto j0 = static_cast<long>(std::floor(y_low / cell)) - 1;
  const auto j1 = static_cast<long>(std::ceil(y_top / cell)) + 1;

  const double step = 1.0 / static_cast<double>(kCoverSamples);
  std::size_t occupied = 0;
  for (long i = i0; i < i1; ++i) {
    for (long j = j0; j < j1; ++j) {
      bool hit = false;
      for (std::size_t a = 0; a < kCoverSamples && !hit; ++a) {
        const double x = (static_cast<double>(i) + (static_cast<double>(a) + 0.5) * step) * cell;
        for (std::size_t b = 0; b < kCoverSamples && !hit; ++b) {
          const double y = (static_cast<double>(j) + (static_cast<double>(b) + 0.5) * step) * cell;
          hit = g.contains({x, y});
        }
      }
      occupied += hit;
    }
  }
  return occupied;
}

PairGeometry thin_geometry(const AnnulusPairConfig& cfg) {
  return {cfg.d, 1.0 - cfg.epsilon, 1.0};
}

}  // namespace

void validate_pair(const AnnulusPairConfig& cfg) {
  validate_epsilon(cfg.epsilon);
  if (!(cfg.d >= 4.0 * cfg.epsilon && cfg.d <= 1.0)) {
    throw InvalidArgument("annulus pair needs 4 eps <= d <= 1, got d = " + std::to_string(cfg.d) +
                          ", eps = " + std::to_string(cfg.epsilon));
  }
}

void validate_thickened(double d, double epsilon) {
  validate_epsilon(epsilon);
  if (!(d >= 12.0 * epsilon && d <= 1.0)) {
    throw InvalidArgument("thickened annulus pair needs 12 eps <= d <= 1, got d = " +
                          std::to_string(d) + ", eps = " + std::to_string(epsilon));
  }
}

IntersectionVertices intersection_vertices(const AnnulusPairConfig& cfg) {
  validate_pair(cfg);
  const double d = cfg.d;
  const double e = cfg.epsilon;
  const double d2 = d * d;
  const double e2 = e * e;

  const double outer_y = checked_sqrt(4.0 - d2, "outer axis") / 2.0;
  const double inner_y = checked_sqrt(4.0 - d2 + 4.0 * e2 - 8.0 * e, "inner axis") / 2.0;
  const double side_x = (2.0 * e - e2) / (2.0 * d);
  const double side_y =
      checked_sqrt(-d2 * d2 + 2.0 * d2 * e2 - 4.0 * d2 * e + 4.0 * d2 - e2 * e2 + 4.0 * e2 * e -
                       4.0 * e2,
                   "side") /
      (2.0 * d);

  return {.axis_outer = {0.0, outer_y},
          .axis_inner = {0.0, inner_y},
          .side_pos = {side_x, side_y},
          .side_neg = {-side_x, side_y}};
}

Spans spans(const AnnulusPairConfig& cfg) {
  const auto v = intersection_vertices(cfg);
  const double width = v.side_pos.x - v.side_neg.x;
  const PairGeometry g = thin_geometry(cfg);

  const double max_step = cfg.epsilon / 100.0;
  const auto steps = static_cast<std::size_t>(std::ceil(width / max_step));
  double height = 0.0;
  for (std::size_t s = 0; s <= steps; ++s) {
    const double x = v.side_neg.x + width * static_cast<double>(s) / static_cast<double>(steps);
    height = std::max(height, g.top(x) - g.bottom(x));
  }
  return {width, height};
}

bool in_upper_region(const AnnulusPairConfig& cfg, Point p) {
  return thin_geometry(cfg).contains(p);
}

std::size_t cover_count(const AnnulusPairConfig& cfg) {
  validate_pair(cfg);
  return rasterize(thin_geometry(cfg), cfg.epsilon / 2.0);
}

Annulus thickened_annulus(Point center, double epsilon) {
  return {center, 1.0 - 2.0 * epsilon, 1.0 + epsilon};
}

std::size_t thickened_cover_count(double d, double epsilon) {
  validate_thickened(d, epsilon);
  return rasterize({d, 1.0 - 2.0 * epsilon, 1.0 + epsilon}, epsilon / 2.0);
}

}  // namespace antipodal
