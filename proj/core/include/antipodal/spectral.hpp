#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "antipodal/boundary_graph.hpp"

namespace antipodal {

/// Relative slack allowed on each link of the bound chain.
inline constexpr double kChainSlack = 1e-9;

struct PowerIterationOptions {
  double tol{1e-9};
  std::size_t max_iter{100000};
};

struct PerronEstimate {
  double lambda{0.0};
  /// Unit-norm iterate over all k vertices; zero on isolated vertices.
  std::vector<double> vector;
  std::size_t iterations{0};
};

/// Power iteration on M + I restricted to non-isolated vertices, started from
/// the all-ones vector. The shift keeps bipartite graphs from oscillating
/// between +lambda and -lambda. Converged once successive Rayleigh quotients
/// agree to tol * lambda and ||Mv - lambda v|| <= 10 tol lambda ||v||.
///
/// Throws EmptyGraph without edges and NonConvergence after max_iter steps.
PerronEstimate perron_estimate(const AntipodalGraph& g, const PowerIterationOptions& opts = {});

double lambda1(const AntipodalGraph& g, const PowerIterationOptions& opts = {});

/// max_i (Mx)_i / x_i over non-isolated i. `x` has one entry per vertex;
/// entries on isolated vertices are ignored, all others must be positive.
double collatz_wielandt_bound(const AntipodalGraph& g, std::span<const double> x);

/// x_i = sqrt(d_i).
std::vector<double> sqrt_degree_vector(const AntipodalGraph& g);

/// max_i sqrt(sum_{j in N(i)} d_j).
double sqrt_degree_bound(const AntipodalGraph& g);

/// sqrt(2 |E|) = sqrt(tr(M^T M)).
double trace_bound(const AntipodalGraph& g);

struct BoundChainReport {
  double lambda1{0.0};
  double cw_bound{0.0};
  double sqrt_degree_bound{0.0};
  double trace_bound{0.0};
  std::size_t k_effective{0};  // non-isolated vertices

  /// lambda1 <= cw <= sqrtdeg <= trace, each up to kChainSlack relative.
  bool ordered() const noexcept;
};

/// All four quantities, with the Collatz-Wielandt certificate x = sqrt(d).
/// Throws std::logic_error if the ordering fails.
BoundChainReport bound_chain(const AntipodalGraph& g, const PowerIterationOptions& opts = {});

}  // namespace antipodal
