#include "antipodal/boundary_graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "antipodal/errors.hpp"

namespace antipodal {

double box_max_distance(const Box& a, const Box& b) {
  const double reach = 0.5 * (a.side + b.side);
  const double dx = std::abs(a.center.x - b.center.x) + reach;
  const double dy = std::abs(a.center.y - b.center.y) + reach;
  return std::sqrt(dx * dx + dy * dy);
}

double box_min_distance(const Box& a, const Box& b) {
  const double reach = 0.5 * (a.side + b.side);
  const double gx = std::max(0.0, std::abs(a.center.x - b.center.x) - reach);
  const double gy = std::max(0.0, std::abs(a.center.y - b.center.y) - reach);
  return std::sqrt(gx * gx + gy * gy);
}

BoundaryBoxing discretize_boundary(const ConvexPolygon& hull, double epsilon) {
  validate_epsilon(epsilon);
  const double perimeter = hull.perimeter();
  if (epsilon >= perimeter / 3.0) {
    throw InvalidArgument("epsilon " + std::to_string(epsilon) +
                          " too large for a boundary of length " + std::to_string(perimeter));
  }
  const double step = epsilon / 2.0;
  const auto k = static_cast<std::size_t>(std::ceil(perimeter / step));

  BoundaryBoxing boxing;
  boxing.epsilon = epsilon;
  boxing.perimeter = perimeter;
  boxing.boxes.reserve(k);
  boxing.arc_positions.reserve(k);

  std::size_t edge = 0;
  double edge_begin = 0.0;
  double edge_len = distance(hull.edge_start(0), hull.edge_end(0));
  for (std::size_t t = 0; t < k; ++t) {
    const double s = static_cast<double>(t) * step;
    while (s > edge_begin + edge_len && edge + 1 < hull.size()) {
      edge_begin += edge_len;
      ++edge;
      edge_len = distance(hull.edge_start(edge), hull.edge_end(edge));
    }
    const double u = std::clamp((s - edge_begin) / edge_len, 0.0, 1.0);
    const Point a = hull.edge_start(edge);
    const Point center = a + u * (hull.edge_end(edge) - a);
    boxing.boxes.push_back({center, step});
    boxing.arc_positions.push_back(s);
  }
  return boxing;
}

AntipodalGraph::AntipodalGraph(std::vector<std::vector<Vertex>> neighbors, AdjacencyStorage storage)
    : neighbors_(std::move(neighbors)) {
  const std::size_t k = neighbors_.size();
  degrees_.reserve(k);
  std::size_t degree_sum = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& row = neighbors_[i];
    for (std::size_t t = 0; t < row.size(); ++t) {
      if (row[t] >= k || row[t] == i || (t > 0 && row[t - 1] >= row[t])) {
        throw InvalidArgument("neighbor list " + std::to_string(i) +
                              " must be sorted, unique, in range and loop free");
      }
    }
    degrees_.push_back(row.size());
    degree_sum += row.size();
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (const Vertex j : neighbors_[i]) {
      if (!std::binary_search(neighbors_[j].begin(), neighbors_[j].end(), static_cast<Vertex>(i))) {
        throw InvalidArgument("adjacency is not symmetric at (" + std::to_string(i) + ", " +
                              std::to_string(j) + ")");
      }
    }
  }
  edge_count_ = degree_sum / 2;

  const bool dense = storage == AdjacencyStorage::dense ||
                     (storage == AdjacencyStorage::automatic && k <= kDenseStorageLimit);
  if (dense && k > 0) {
    words_per_row_ = (k + 63) / 64;
    bits_.assign(words_per_row_ * k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      for (const Vertex j : neighbors_[i]) {
        bits_[i * words_per_row_ + j / 64] |= std::uint64_t{1} << (j % 64);
      }
    }
  }
}

AntipodalGraph AntipodalGraph::from_edges(
    std::size_t k, std::span<const std::pair<std::size_t, std::size_t>> edges,
    AdjacencyStorage storage) {
  std::vector<std::vector<Vertex>> lists(k);
  for (const auto& [a, b] : edges) {
    if (a >= k || b >= k || a == b) {
      throw InvalidArgument("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                            ") is a loop or out of range");
    }
    lists[a].push_back(static_cast<Vertex>(b));
    lists[b].push_back(static_cast<Vertex>(a));
  }
  for (auto& row : lists) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return AntipodalGraph(std::move(lists), storage);
}

std::size_t AntipodalGraph::max_degree() const noexcept {
  return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

std::size_t AntipodalGraph::non_isolated_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(degrees_.begin(), degrees_.end(), [](std::size_t d) { return d > 0; }));
}

bool AntipodalGraph::adjacent(std::size_t i, std::size_t j) const {
  if (i >= k() || j >= k()) throw InvalidArgument("vertex out of range");
  if (is_dense()) return (bits_[i * words_per_row_ + j / 64] >> (j % 64)) & 1U;
  return std::binary_search(neighbors_[i].begin(), neighbors_[i].end(), static_cast<Vertex>(j));
}

std::size_t AntipodalGraph::common_neighbors(std::size_t i, std::size_t j) const {
  if (i >= k() || j >= k()) throw InvalidArgument("vertex out of range");
  std::size_t count = 0;
  if (is_dense()) {
    const std::uint64_t* a = &bits_[i * words_per_row_];
    const std::uint64_t* b = &bits_[j * words_per_row_];
    for (std::size_t w = 0; w < words_per_row_; ++w) count += std::popcount(a[w] & b[w]);
    return count;
  }
  const auto& a = neighbors_[i];
  const auto& b = neighbors_[j];
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

AntipodalGraph build_graph(const BoundaryBoxing& boxing, AdjacencyStorage storage) {
  const std::size_t k = boxing.k();
  const double threshold = 1.0 - boxing.epsilon;
  std::vector<std::vector<AntipodalGraph::Vertex>> lists(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (box_max_distance(boxing.boxes[i], boxing.boxes[j]) >= threshold) {
        lists[i].push_back(static_cast<AntipodalGraph::Vertex>(j));
        lists[j].push_back(static_cast<AntipodalGraph::Vertex>(i));
      }
    }
  }
  // Rows filled in increasing j order are already sorted.
  return AntipodalGraph(std::move(lists), storage);
}

std::vector<std::size_t> near_set_W(const BoundaryBoxing& boxing, std::size_t i,
                                    double radius_factor) {
  if (i >= boxing.k()) throw InvalidArgument("vertex out of range");
  const double radius = radius_factor * boxing.epsilon;
  std::vector<std::size_t> near;
  for (std::size_t w = 0; w < boxing.k(); ++w) {
    if (box_min_distance(boxing.boxes[i], boxing.boxes[w]) <= radius) near.push_back(w);
  }
  return near;
}

std::size_t common_neighbors(const AntipodalGraph& g, std::size_t i, std::size_t j) {
  if (i == j) throw InvalidArgument("common_neighbors needs distinct vertices");
  return g.common_neighbors(i, j);
}

std::vector<std::size_t> common_neighbor_profile(const AntipodalGraph& g, std::size_t i) {
  std::vector<std::size_t> profile(g.k(), 0);
  for (const auto l : g.neighbors(i)) {
    for (const auto j : g.neighbors(l)) ++profile[j];
  }
  return profile;
}

std::size_t TailCounts::max_s_times_count() const noexcept {
  std::size_t best = 0;
  for (std::size_t s = 1; s <= at_least.size(); ++s) best = std::max(best, s * at_least[s - 1]);
  return best;
}

TailCounts tail_counts(const AntipodalGraph& g, std::size_t i, std::span<const std::size_t> W) {
  const std::size_t k = g.k();
  std::vector<bool> near(k, false);
  for (const auto w : W) near.at(w) = true;
  near.at(i) = true;

  const auto profile = common_neighbor_profile(g, i);
  // histogram[c] = number of far vertices with exactly c common neighbors.
  std::vector<std::size_t> histogram(k + 1, 0);
  TailCounts tail;
  for (std::size_t j = 0; j < k; ++j) {
    if (near[j]) continue;
    ++histogram[profile[j]];
    tail.far_common_sum += profile[j];
  }
  tail.at_least.assign(k, 0);
  std::size_t running = 0;
  for (std::size_t s = k; s >= 1; --s) {
    running += histogram[s];
    tail.at_least[s - 1] = running;
  }
  return tail;
}

std::size_t neighborhood_degree_sum(const AntipodalGraph& g, std::size_t i) {
  if (g.degree(i) == 0) throw IsolatedVertex("vertex " + std::to_string(i) + " is isolated");
  std::size_t sum = 0;
  for (const auto j : g.neighbors(i)) sum += g.degree(j);
  return sum;
}

GraphStats graph_stats(const BoundaryBoxing& boxing, const AntipodalGraph& g,
                       double radius_factor) {
  GraphStats stats{.k = g.k(), .edges = g.edge_count(), .max_degree = g.max_degree()};
  std::size_t best_tail = 0;
  for (std::size_t i = 0; i < g.k(); ++i) {
    if (g.degree(i) == 0) continue;
    stats.max_nbr_deg_sum = std::max(stats.max_nbr_deg_sum, neighborhood_degree_sum(g, i));
    const auto W = near_set_W(boxing, i, radius_factor);
    best_tail = std::max(best_tail, tail_counts(g, i, W).max_s_times_count());
  }
  stats.max_s_Ts_over_k =
      g.k() == 0 ? 0.0 : static_cast<double>(best_tail) / static_cast<double>(g.k());
  return stats;
}

}  // namespace antipodal
