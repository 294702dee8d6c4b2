#pragma once

#include <cstddef>

#include "antipodal/geometry.hpp"

namespace antipodal {

/// Calibrated constant in cover_count(cfg) * d <= C for the thin region.
inline constexpr double kCoverConstant = 10.0;
/// Same for the thickened (three times wider) region.
inline constexpr double kThickenedCoverConstant = 64.0;
/// Vertical thickness bound height < kHeightFactor * epsilon.
inline constexpr double kHeightFactor = 1.2;
/// Radicands down to -kRadicandClamp are treated as zero.
inline constexpr double kRadicandClamp = 1e-14;
/// Cover rasterization samples per cell edge.
inline constexpr std::size_t kCoverSamples = 8;

/// Closed annulus {p : inner <= |p - center| <= outer}.
struct Annulus {
  Point center;
  double inner{0.0};
  double outer{0.0};

  bool contains(Point p) const {
    const double r = distance(p, center);
    return r >= inner && r <= outer;
  }
};

/// Two congruent annuli of radii (1 - epsilon, 1) centered at (-d/2, 0) and
/// (d/2, 0).
struct AnnulusPairConfig {
  double d{0.0};
  double epsilon{0.0};

  Annulus left() const { return {{-d / 2.0, 0.0}, 1.0 - epsilon, 1.0}; }
  Annulus right() const { return {{d / 2.0, 0.0}, 1.0 - epsilon, 1.0}; }
};

/// Throws InvalidArgument unless 0 < epsilon < 1/2 and 4 epsilon <= d <= 1.
void validate_pair(const AnnulusPairConfig& cfg);

/// Throws InvalidArgument unless 0 < epsilon < 1/2 and 12 epsilon <= d <= 1.
void validate_thickened(double d, double epsilon);

/// The four corners of the upper intersection region.
struct IntersectionVertices {
  Point axis_outer;  // both outer circles
  Point axis_inner;  // both inner circles
  Point side_pos;    // outer circle of the left annulus, inner circle of the right
  Point side_neg;    // mirror image of side_pos
};

/// Closed-form corners. Throws NegativeRadicand when a radicand is below
/// -kRadicandClamp.
IntersectionVertices intersection_vertices(const AnnulusPairConfig& cfg);

struct Spans {
  double width{0.0};   // horizontal extent, 2 * side_pos.x
  double height{0.0};  // maximal vertical thickness
};

/// Height is the maximum over x of top(x) - bottom(x), sampled at steps of
/// at most epsilon / 100 across the region's x-range.
Spans spans(const AnnulusPairConfig& cfg);

/// Membership in the upper intersection region.
bool in_upper_region(const AnnulusPairConfig& cfg, Point p);

/// Cells of the origin-anchored (epsilon/2)-grid occupied by the upper
/// intersection region, with kCoverSamples^2 samples per cell.
std::size_t cover_count(const AnnulusPairConfig& cfg);

/// Annulus with radii (1 - 2 eps, 1 + eps) about `center`; it contains every
/// (1 - eps, 1) annulus whose center lies in the side-(eps/2) box at `center`.
Annulus thickened_annulus(Point center, double epsilon);

/// cover_count for the pair of thickened annuli at distance d.
std::size_t thickened_cover_count(double d, double epsilon);

}  // namespace antipodal
