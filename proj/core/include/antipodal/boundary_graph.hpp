#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "antipodal/geometry.hpp"

namespace antipodal {

/// Axis-aligned closed square.
struct Box {
  Point center;
  double side{0.0};
};

/// Largest distance between points of the two boxes (attained at corners).
double box_max_distance(const Box& a, const Box& b);

/// Smallest distance between points of the two boxes; 0 when they overlap.
double box_min_distance(const Box& a, const Box& b);

/// Boxes of side eps/2 centered at arc-length samples 0, eps/2, eps, ... of
/// the hull boundary, starting at the hull's first vertex.
struct BoundaryBoxing {
  std::vector<Box> boxes;
  std::vector<double> arc_positions;  // arc length of each box center
  double epsilon{0.0};
  double perimeter{0.0};

  std::size_t k() const noexcept { return boxes.size(); }
};

/// k = ceil(perimeter / (eps/2)). Throws InvalidArgument for eps outside
/// (0, 1/2) or eps >= perimeter / 3.
BoundaryBoxing discretize_boundary(const ConvexPolygon& hull, double epsilon);

enum class AdjacencyStorage { automatic, dense, sparse };

/// Graphs up to this many vertices keep a dense bit matrix under `automatic`.
inline constexpr std::size_t kDenseStorageLimit = 4096;

/// Simple undirected graph. Sorted neighbor lists are always kept; `dense`
/// storage adds a bit matrix used for adjacency and intersection queries.
class AntipodalGraph {
 public:
  using Vertex = std::uint32_t;

  /// `neighbors[i]` must be sorted, duplicate free, free of i, and symmetric.
  AntipodalGraph(std::vector<std::vector<Vertex>> neighbors,
                 AdjacencyStorage storage = AdjacencyStorage::automatic);

  static AntipodalGraph from_edges(std::size_t k,
                                   std::span<const std::pair<std::size_t, std::size_t>> edges,
                                   AdjacencyStorage storage = AdjacencyStorage::automatic);

  std::size_t k() const noexcept { return neighbors_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::size_t degree(std::size_t i) const { return neighbors_.at(i).size(); }
  std::span<const std::size_t> degrees() const noexcept { return degrees_; }
  std::span<const Vertex> neighbors(std::size_t i) const { return neighbors_.at(i); }
  std::size_t max_degree() const noexcept;
  std::size_t non_isolated_count() const noexcept;

  bool is_dense() const noexcept { return words_per_row_ != 0; }
  bool adjacent(std::size_t i, std::size_t j) const;

  /// |N(i) ∩ N(j)|; bit-matrix popcount when dense, list merge otherwise.
  std::size_t common_neighbors(std::size_t i, std::size_t j) const;

 private:
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<std::size_t> degrees_;
  std::size_t edge_count_{0};
  std::vector<std::uint64_t> bits_;
  std::size_t words_per_row_{0};
};

/// Edge i~j iff i != j and box_max_distance(B_i, B_j) >= 1 - eps.
AntipodalGraph build_graph(const BoundaryBoxing& boxing,
                           AdjacencyStorage storage = AdjacencyStorage::automatic);

/// Boxes within exact min-distance radius_factor * eps of box i (inclusive).
/// Always contains i. Sorted.
std::vector<std::size_t> near_set_W(const BoundaryBoxing& boxing, std::size_t i,
                                    double radius_factor = 100.0);

/// |N(i) ∩ N(j)|; throws InvalidArgument when i == j.
std::size_t common_neighbors(const AntipodalGraph& g, std::size_t i, std::size_t j);

/// |N(i) ∩ N(j)| for every j, by walking paths of length two from i.
std::vector<std::size_t> common_neighbor_profile(const AntipodalGraph& g, std::size_t i);

struct TailCounts {
  /// at_least[s - 1] = #{j outside W : |N(i) ∩ N(j)| >= s}, s = 1..k.
  std::vector<std::size_t> at_least;
  /// Sum over j outside W of |N(i) ∩ N(j)|; equals the sum of `at_least`.
  std::size_t far_common_sum{0};

  /// max_s s * T_s (0 when every T_s is 0).
  std::size_t max_s_times_count() const noexcept;
};

TailCounts tail_counts(const AntipodalGraph& g, std::size_t i, std::span<const std::size_t> W);

/// Sum of d_j over j in N(i). Throws IsolatedVertex when d_i = 0.
std::size_t neighborhood_degree_sum(const AntipodalGraph& g, std::size_t i);

struct GraphStats {
  std::size_t k{0};
  std::size_t edges{0};
  std::size_t max_degree{0};
  std::size_t max_nbr_deg_sum{0};
  double max_s_Ts_over_k{0.0};
};

GraphStats graph_stats(const BoundaryBoxing& boxing, const AntipodalGraph& g,
                       double radius_factor = 100.0);

}  // namespace antipodal
