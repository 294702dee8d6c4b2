#include "antipodal/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "antipodal/errors.hpp"

namespace antipodal {

namespace {

void require_edges(const AntipodalGraph& g) {
  if (g.edge_count() == 0) throw EmptyGraph("graph has no edges");
}

void multiply(const AntipodalGraph& g, std::span<const double> v, std::span<double> out) {
  for (std::size_t i = 0; i < g.k(); ++i) {
    double sum = 0.0;
    for (const auto j : g.neighbors(i)) sum += v[j];
    out[i] = sum;
  }
}

double norm2(std::span<const double> v) {
  return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
}

bool within(double lower, double upper) {
  return lower <= upper + kChainSlack * std::max(std::abs(lower), std::abs(upper));
}

}  // namespace

PerronEstimate perron_estimate(const AntipodalGraph& g, const PowerIterationOptions& opts) {
  require_edges(g);
  const std::size_t k = g.k();

  std::vector<double> v(k, 0.0);
  for (std::size_t i = 0; i < k; ++i) v[i] = g.degree(i) > 0 ? 1.0 : 0.0;
  double scale = norm2(v);
  for (auto& x : v) x /= scale;

  std::vector<double> mv(k, 0.0);
  double previous = 0.0;
  for (std::size_t iter = 1; iter <= opts.max_iter; ++iter) {
    multiply(g, v, mv);
    // Rayleigh quotient of M; v has unit norm.
    const double lambda = std::inner_product(v.begin(), v.end(), mv.begin(), 0.0);

    double residual2 = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      const double r = mv[i] - lambda * v[i];
      residual2 += r * r;
    }
    const bool settled = iter > 1 && std::abs(lambda - previous) < opts.tol * lambda;
    if (settled && std::sqrt(residual2) <= 10.0 * opts.tol * lambda) {
      return {lambda, std::move(v), iter};
    }
    previous = lambda;

    // v <- (M + I) v, normalized.
    for (std::size_t i = 0; i < k; ++i) mv[i] += v[i];
    scale = norm2(mv);
    for (std::size_t i = 0; i < k; ++i) v[i] = mv[i] / scale;
  }
  throw NonConvergence("power iteration did not converge in " + std::to_string(opts.max_iter) +
                           " iterations",
                       previous, opts.max_iter);
}

double lambda1(const AntipodalGraph& g, const PowerIterationOptions& opts) {
  return perron_estimate(g, opts).lambda;
}

double collatz_wielandt_bound(const AntipodalGraph& g, std::span<const double> x) {
  require_edges(g);
  if (x.size() != g.k()) {
    throw InvalidArgument("certificate has " + std::to_string(x.size()) + " entries, graph has " +
                          std::to_string(g.k()) + " vertices");
  }
  double best = 0.0;
  for (std::size_t i = 0; i < g.k(); ++i) {
    if (g.degree(i) == 0) continue;
    if (!(x[i] > 0.0)) {
      throw InvalidArgument("certificate entry " + std::to_string(i) + " is not positive");
    }
    double mx = 0.0;
    for (const auto j : g.neighbors(i)) mx += x[j];
    best = std::max(best, mx / x[i]);
  }
  return best;
}

std::vector<double> sqrt_degree_vector(const AntipodalGraph& g) {
  std::vector<double> x(g.k());
  for (std::size_t i = 0; i < g.k(); ++i) x[i] = std::sqrt(static_cast<double>(g.degree(i)));
  return x;
}

double sqrt_degree_bound(const AntipodalGraph& g) {
  require_edges(g);
  std::size_t best = 0;
  for (std::size_t i = 0; i < g.k(); ++i) {
    if (g.degree(i) > 0) best = std::max(best, neighborhood_degree_sum(g, i));
  }
  return std::sqrt(static_cast<double>(best));
}

double trace_bound(const AntipodalGraph& g) {
  require_edges(g);
  return std::sqrt(2.0 * static_cast<double>(g.edge_count()));
}

bool BoundChainReport::ordered() const noexcept {
  return within(lambda1, cw_bound) && within(cw_bound, sqrt_degree_bound) &&
         within(sqrt_degree_bound, trace_bound);
}

BoundChainReport bound_chain(const AntipodalGraph& g, const PowerIterationOptions& opts) {
  BoundChainReport report{
      .lambda1 = lambda1(g, opts),
      .cw_bound = collatz_wielandt_bound(g, sqrt_degree_vector(g)),
      .sqrt_degree_bound = sqrt_degree_bound(g),
      .trace_bound = trace_bound(g),
      .k_effective = g.non_isolated_count(),
  };
  if (!report.ordered()) {
    throw std::logic_error("bound chain ordering violated: lambda1 = " +
                           std::to_string(report.lambda1) + ", cw = " +
                           std::to_string(report.cw_bound) + ", sqrtdeg = " +
                           std::to_string(report.sqrt_degree_bound) + ", trace = " +
                           std::to_string(report.trace_bound));
  }
  return report;
}

}  // namespace antipodal
