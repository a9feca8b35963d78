#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fiedler/generators.hpp"
#include "fiedler/game.hpp"
#include "fiedler/spectral.hpp"
#include "oracles.hpp"

using namespace fiedler;

TEST(ExactPayoff, SameVertexIsZero) {
  const auto g = gen_path(4);
  const auto p = fiedler_pair(g);
  EXPECT_EQ(exact_payoff({g, p, 2, 2}), 0.0);
}

TEST(ExactPayoff, SingleEdge) {
  const auto g = gen_path(2);
  const auto p = fiedler_pair(g);
  EXPECT_NEAR(exact_payoff({g, p, 0, 1}), std::sqrt(2.0), 1e-12);
}

TEST(ExactPayoff, RepresentsEigenvectorDifferences) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const auto t = oracle::random_tree(2 + trial % 40, rng);
    const int n = t.vertex_count();
    const int k = 2 + static_cast<int>(rng() % (n - 1));
    const auto p = eigenpair_k(t, k);
    const int s = static_cast<int>(rng() % n), target = static_cast<int>(rng() % n);
    const double value = exact_payoff({t, p, s, target});
    EXPECT_NEAR(value, p.phi[s] - p.phi[target], 1e-8);
    // dense absorbing-chain oracle
    EXPECT_NEAR(value, oracle::payoff(t, p.lambda, p.phi, target)[s], 1e-8);
  }
}

TEST(ExactPayoff, HoldsOnGraphsWithCycles) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 6 + trial;
    auto edges = oracle::random_tree(n, rng).edges();
    const auto t = Graph::from_edges(n, edges);
    for (int e = 0; e < 5; ++e) {
      int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
      if (u != v && !Graph::from_edges(n, edges).has_edge(u, v)) edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    const auto g = Graph::from_edges(n, edges);
    const auto p = fiedler_pair(g);
    EXPECT_NEAR(exact_payoff({g, p, 0, n - 1}), p.phi[0] - p.phi[n - 1], 1e-8);
  }
}

TEST(ExactPayoff, ValidatesInput) {
  const auto g = gen_path(3);
  const auto p = fiedler_pair(g);
  EXPECT_THROW(exact_payoff({g, p, 0, 3}), std::invalid_argument);
  auto short_phi = p;
  short_phi.phi.pop_back();
  EXPECT_THROW(exact_payoff({g, short_phi, 0, 1}), std::invalid_argument);
}

TEST(Simulation, SingleEdgeIsExactEveryTime) {
  const auto g = gen_path(2);
  const auto p = fiedler_pair(g);
  const auto est = simulate_payoff({g, p, 0, 1}, {.samples = 1000, .seed = 7});
  EXPECT_NEAR(est.mc_mean, std::sqrt(2.0), 1e-12);
  EXPECT_EQ(est.total_steps, 1000);
}

TEST(Simulation, CoversExactValue) {
  const auto g = gen_rose_on_path(9, 3, 12);
  const auto p = fiedler_pair(g);
  const GameSpec spec{g, p, 22, 0};
  const auto est = simulate_payoff(spec, {.samples = 100000, .seed = 99});
  EXPECT_NEAR(est.exact, p.phi[22] - p.phi[0], 1e-9);
  EXPECT_LT(std::abs(est.mc_mean - est.exact), 4.0 * est.mc_stderr);
  EXPECT_GT(est.mc_stderr, 0.0);
}

TEST(Simulation, IndependentOfParallelism) {
  std::mt19937_64 rng(33);
  const auto t = oracle::random_tree(25, rng);
  const auto p = fiedler_pair(t);
  const GameSpec spec{t, p, 3, 17};
  const auto a = simulate_payoff(spec, {.samples = 20000, .seed = 5, .parallelism = 1});
  const auto b = simulate_payoff(spec, {.samples = 20000, .seed = 5, .parallelism = 4});
  EXPECT_EQ(a.mc_mean, b.mc_mean);
  EXPECT_EQ(a.mc_stderr, b.mc_stderr);
  EXPECT_EQ(a.total_steps, b.total_steps);
  const auto c = simulate_payoff(spec, {.samples = 20000, .seed = 6});
  EXPECT_NE(a.mc_mean, c.mc_mean);
}

TEST(Simulation, StepCapIsReported) {
  const auto g = gen_path(30);
  const auto p = fiedler_pair(g);
  const auto est = simulate_payoff({g, p, 0, 29}, {.samples = 100, .seed = 1, .max_steps = 10});
  EXPECT_TRUE(est.max_steps_hit);
  EXPECT_EQ(est.truncated_samples, 100);
  EXPECT_EQ(est.total_steps, 1000);
}

TEST(Simulation, SameVertex) {
  const auto g = gen_path(3);
  const auto p = fiedler_pair(g);
  const auto est = simulate_payoff({g, p, 1, 1}, {.samples = 10, .seed = 1});
  EXPECT_EQ(est.mc_mean, 0.0);
  EXPECT_EQ(est.mc_stderr, 0.0);
}

TEST(Encounters, SmallPaths) {
  const auto p2 = expected_encounters(gen_path(2), 1, 0);
  EXPECT_NEAR(p2[0], 1.0, 1e-12);
  EXPECT_EQ(p2[1], 0.0);
  // the walk from 0 on P_3 absorbed at 2 returns to 0 once on average
  const auto p3 = expected_encounters(gen_path(3), 2, 0);
  EXPECT_NEAR(p3[0], 2.0, 1e-12);
  EXPECT_NEAR(p3[1], 2.0, 1e-12);
}

TEST(Encounters, SumToHittingTime) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 20; ++trial) {
    const auto t = oracle::random_tree(3 + trial, rng);
    const int n = t.vertex_count();
    const auto visits = expected_encounters(t, 0, n - 1);
    double steps = 0.0;
    for (double v : visits) steps += v;
    EXPECT_NEAR(steps, oracle::hitting_times(t, {0})[n - 1], 1e-8);
  }
}
