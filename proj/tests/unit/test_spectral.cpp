#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "antipodal/errors.hpp"
#include "antipodal/generators.hpp"
#include "antipodal/spectral.hpp"
#include "oracles.hpp"

using namespace antipodal;

TEST(Lambda1, KnownSpectra) {
  EXPECT_NEAR(lambda1(oracle::complete_graph(5)), 4.0, 1e-6);
  EXPECT_NEAR(lambda1(oracle::cycle_graph(8)), 2.0, 1e-6);
  EXPECT_NEAR(lambda1(oracle::star_graph(9)), 3.0, 1e-6);
  EXPECT_NEAR(lambda1(oracle::complete_graph(2)), 1.0, 1e-6);
}

TEST(Lambda1, IsolatedVerticesIgnored) {
  const std::vector<std::pair<std::size_t, std::size_t>> edges{{0, 1}, {1, 2}, {2, 0}};
  const auto g = AntipodalGraph::from_edges(6, edges);
  const auto est = perron_estimate(g);
  EXPECT_NEAR(est.lambda, 2.0, 1e-6);
  EXPECT_EQ(est.vector[4], 0.0);
  double norm2 = 0.0;
  for (const double v : est.vector) norm2 += v * v;
  EXPECT_NEAR(norm2, 1.0, 1e-12);
}

TEST(Lambda1, Errors) {
  EXPECT_THROW(lambda1(AntipodalGraph::from_edges(4, {})), EmptyGraph);
  try {
    lambda1(oracle::random_graph(40, 0.3, 1), {.tol = 1e-15, .max_iter = 3});
    FAIL() << "expected NonConvergence";
  } catch (const NonConvergence& e) {
    EXPECT_EQ(e.iterations(), 3u);
    EXPECT_GT(e.last_estimate(), 0.0);
  }
}

TEST(Lambda1, PermutationInvariant) {
  std::mt19937_64 rng(21);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = oracle::random_graph(45, 0.3, seed);
    std::vector<std::size_t> perm(g.k());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    const double a = lambda1(g);
    EXPECT_NEAR(lambda1(oracle::relabel(g, perm)), a, 1e-8 * a);
  }
}

TEST(CollatzWielandt, StarIsTight) {
  for (std::size_t m = 2; m <= 16; ++m) {
    const auto g = oracle::star_graph(m);
    EXPECT_NEAR(collatz_wielandt_bound(g, sqrt_degree_vector(g)), std::sqrt(double(m)), 1e-12);
    EXPECT_NEAR(sqrt_degree_bound(g), std::sqrt(double(m)), 1e-12);
  }
}

TEST(CollatzWielandt, OnesOnCompleteAndPerronVector) {
  const auto k4 = oracle::complete_graph(4);
  const std::vector<double> ones(4, 1.0);
  EXPECT_EQ(collatz_wielandt_bound(k4, ones), 3.0);

  const auto g = oracle::random_graph(30, 0.3, 4);
  const auto est = perron_estimate(g, {.tol = 1e-12, .max_iter = 100000});
  EXPECT_NEAR(collatz_wielandt_bound(g, est.vector), est.lambda, 1e-6);
}

TEST(CollatzWielandt, ScaleInvariantAndValidated) {
  const auto g = oracle::random_graph(40, 0.3, 8);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.1, 2.0);
  std::vector<double> x(g.k());
  for (auto& v : x) v = u(rng);
  const double base = collatz_wielandt_bound(g, x);
  EXPECT_GE(base, lambda1(g) * (1 - 1e-9));
  for (const double alpha : {0.5, 2.0, 4.0, 0.125}) {
    std::vector<double> scaled(x);
    for (auto& v : scaled) v *= alpha;
    EXPECT_EQ(collatz_wielandt_bound(g, scaled), base);
  }
  x[3] = 0.0;
  EXPECT_THROW(collatz_wielandt_bound(g, x), InvalidArgument);
  x.pop_back();
  EXPECT_THROW(collatz_wielandt_bound(g, x), InvalidArgument);
}

TEST(TraceBound, Examples) {
  EXPECT_NEAR(trace_bound(oracle::complete_graph(2)), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(trace_bound(oracle::star_graph(9)), std::sqrt(18.0), 1e-15);
  // K5 has 10 edges: sqrt(2 |E|) = sqrt(20).
  EXPECT_NEAR(trace_bound(oracle::complete_graph(5)), std::sqrt(20.0), 1e-15);
}

TEST(BoundChain, StarAndCycle) {
  const auto star = bound_chain(oracle::star_graph(9));
  EXPECT_NEAR(star.lambda1, 3.0, 1e-6);
  EXPECT_NEAR(star.cw_bound, 3.0, 1e-12);
  EXPECT_NEAR(star.sqrt_degree_bound, 3.0, 1e-12);
  EXPECT_NEAR(star.trace_bound, std::sqrt(18.0), 1e-12);
  EXPECT_TRUE(star.ordered());
  for (std::size_t k = 4; k <= 12; ++k) {
    const auto c = bound_chain(oracle::cycle_graph(k));
    EXPECT_NEAR(c.lambda1, 2.0, 1e-6);
    EXPECT_NEAR(c.cw_bound, 2.0, 1e-12);
    EXPECT_NEAR(c.sqrt_degree_bound, 2.0, 1e-12);
    EXPECT_NEAR(c.trace_bound, std::sqrt(2.0 * double(k)), 1e-12);
  }
}

TEST(BoundChain, RandomGraphsOrdered) {
  for (std::uint64_t seed = 100; seed < 150; ++seed) {
    const auto g = oracle::random_graph(10 + seed % 40, 0.3, seed);
    if (g.edge_count() == 0) continue;
    EXPECT_TRUE(bound_chain(g).ordered()) << seed;
  }
}

TEST(BoundChain, CircleGapAtOneOver256) {
  const auto boxing = discretize_boundary(convex_hull(circle_config(10000)), 1.0 / 256);
  const auto report = bound_chain(build_graph(boxing));
  EXPECT_TRUE(report.ordered());
  EXPECT_GE(report.sqrt_degree_bound, report.cw_bound * (1 - kChainSlack));
  EXPECT_LE(report.sqrt_degree_bound, report.trace_bound);
  EXPECT_GT(report.trace_bound / report.cw_bound, 2.0);
}
