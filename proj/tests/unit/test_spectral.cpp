#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fiedler/errors.hpp"
#include "fiedler/generators.hpp"
#include "fiedler/linalg.hpp"
#include "fiedler/spectral.hpp"
#include "oracles.hpp"

using namespace fiedler;

namespace {

double path_lambda2(int n) { return 2.0 * (1.0 - std::cos(std::numbers::pi / n)); }

double abs_overlap(const std::vector<double>& a, const std::vector<double>& b) { return std::abs(dot(a, b)); }

}  // namespace

TEST(FiedlerPair, PathClosedForm) {
  for (int n : {2, 3, 4, 10, 64, 257}) {
    const auto p = fiedler_pair(gen_path(n));
    EXPECT_NEAR(p.lambda, path_lambda2(n), 1e-12) << n;
    EXPECT_EQ(p.k, 2);
    EXPECT_FALSE(p.degenerate);
    EXPECT_NEAR(norm2(p.phi), 1.0, 1e-12);
    EXPECT_LT(p.residual, 1e-10);
    // phi_2(v) proportional to cos(pi (v + 1/2) / n), sign fixed positive first
    const double scale = p.phi[0] / std::cos(std::numbers::pi * 0.5 / n);
    for (int v = 0; v < n; ++v) EXPECT_NEAR(p.phi[v], scale * std::cos(std::numbers::pi * (v + 0.5) / n), 1e-9);
  }
}

TEST(FiedlerPair, AgreesWithJacobiOracle) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const auto t = oracle::random_tree(3 + trial, rng);
    const auto ref = oracle::jacobi_eigen(oracle::laplacian(t));
    const auto p = fiedler_pair(t);
    EXPECT_NEAR(p.lambda, ref.values[1], 1e-10);
    const bool degenerate = ref.values[2] - ref.values[1] <= kDegeneracyGap;
    EXPECT_EQ(p.degenerate, degenerate);
    if (!degenerate) EXPECT_NEAR(abs_overlap(p.phi, ref.vectors[1]), 1.0, 1e-9);
    ASSERT_TRUE(p.gap_to_next);
    EXPECT_NEAR(*p.gap_to_next, ref.values[2] - ref.values[1], 1e-9);
  }
}

TEST(FiedlerPair, IterativeMatchesDense) {
  std::mt19937_64 rng(22);
  for (int n : {30, 150, 400}) {
    const auto t = oracle::random_tree(n, rng);
    const auto dense = fiedler_pair(t, {.path = SolverPath::dense});
    const auto iter = fiedler_pair(t, {.path = SolverPath::iterative});
    EXPECT_NEAR(iter.lambda, dense.lambda, 1e-10 * std::max(1.0, dense.lambda));
    if (!dense.degenerate) EXPECT_NEAR(abs_overlap(iter.phi, dense.phi), 1.0, 1e-8);
    EXPECT_EQ(iter.degenerate, dense.degenerate);
  }
}

TEST(FiedlerPair, LargePathUsesIterativePath) {
  const int n = 3000;
  const auto p = fiedler_pair(gen_path(n));
  EXPECT_NEAR(p.lambda, path_lambda2(n), 1e-12);
  EXPECT_LT(p.residual, 1e-9);
}

TEST(FiedlerPair, SignConvention) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = fiedler_pair(oracle::random_tree(5 + trial, rng));
    for (double x : p.phi) {
      if (std::abs(x) > 1e-8) {
        EXPECT_GT(x, 0.0);
        break;
      }
    }
  }
}

TEST(FiedlerPair, StarIsDegenerate) {
  const auto p = fiedler_pair(gen_rose(5));
  EXPECT_NEAR(p.lambda, 1.0, 1e-12);
  EXPECT_TRUE(p.degenerate);
  EXPECT_FALSE(fiedler_pair(gen_path(3)).degenerate);
}

TEST(FiedlerPair, OrthogonalToConstant) {
  std::mt19937_64 rng(24);
  const auto p = fiedler_pair(oracle::random_tree(50, rng));
  double s = 0.0;
  for (double x : p.phi) s += x;
  EXPECT_NEAR(s, 0.0, 1e-10);
}

TEST(FiedlerPair, Errors) {
  EXPECT_THROW(fiedler_pair(gen_path(1)), std::invalid_argument);
  const auto split = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}});
  EXPECT_THROW(fiedler_pair(split), DisconnectedGraphError);
}

TEST(EigenpairK, EndsOfSpectrum) {
  const auto g = gen_path(6);
  const auto first = eigenpair_k(g, 1);
  EXPECT_NEAR(first.lambda, 0.0, 1e-12);
  for (double x : first.phi) EXPECT_NEAR(x, 1.0 / std::sqrt(6.0), 1e-12);
  const auto last = eigenpair_k(g, 6);
  EXPECT_NEAR(last.lambda, 2.0 - 2.0 * std::cos(std::numbers::pi * 5 / 6), 1e-12);
  EXPECT_FALSE(last.gap_to_next);
  EXPECT_THROW(eigenpair_k(g, 0), std::invalid_argument);
  EXPECT_THROW(eigenpair_k(g, 7), std::invalid_argument);
}

TEST(EigenpairK, ResidualsSmall) {
  std::mt19937_64 rng(25);
  const auto t = oracle::random_tree(30, rng);
  for (int k = 1; k <= 30; ++k) {
    const auto p = eigenpair_k(t, k);
    EXPECT_LT(eigen_residual(t, p.lambda, p.phi), 1e-9);
  }
}

TEST(FiedlerConnectivity, HoldsOnTreesAndCyclicGraphs) {
  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = oracle::random_tree(4 + trial % 30, rng);
    if (trial % 2) {
      auto edges = g.edges();
      const int n = g.vertex_count();
      int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
      if (u != v && !g.has_edge(u, v)) edges.emplace_back(std::min(u, v), std::max(u, v));
      g = Graph::from_edges(n, edges);
    }
    const auto p = fiedler_pair(g);
    if (!p.degenerate) EXPECT_TRUE(verify_fiedler_connectivity(g, p));
  }
}

TEST(Monotonicity, PassesOnNondegenerateTrees) {
  std::mt19937_64 rng(27);
  for (int trial = 0; trial < 60; ++trial) {
    const auto t = oracle::random_tree(3 + trial % 40, rng);
    const auto p = fiedler_pair(t);
    const auto v = verify_monotonicity(t, p);
    if (p.degenerate) {
      EXPECT_EQ(v.status, MonotonicityVerdict::Status::inconclusive);
    } else {
      EXPECT_EQ(v.status, MonotonicityVerdict::Status::pass) << v.reason;
    }
  }
}

TEST(Monotonicity, DetectsPerturbedVector) {
  const auto g = gen_path(8);
  auto p = fiedler_pair(g);
  std::swap(p.phi[0], p.phi[1]);
  const auto v = verify_monotonicity(g, p);
  EXPECT_EQ(v.status, MonotonicityVerdict::Status::fail);
  EXPECT_TRUE(v.witness);
}

TEST(Bounds, HoldOnRandomTrees) {
  std::mt19937_64 rng(28);
  for (int trial = 0; trial < 60; ++trial) {
    const auto t = oracle::random_tree(3 + trial, rng);
    const auto p = fiedler_pair(t);
    const auto b = bounds_report(t, p);
    EXPECT_TRUE(b.mckay_holds);
    EXPECT_TRUE(b.ten_over_d2_holds);
    EXPECT_TRUE(b.path_upper_holds);
    if (!p.degenerate) {
      EXPECT_TRUE(b.linf_holds);
      EXPECT_TRUE(b.positive_mass_holds);
    }
  }
}

TEST(LaplacianOperator, SymmetricSemidefiniteAnnihilatesConstants) {
  std::mt19937_64 rng(29);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 20; ++trial) {
    const auto t = oracle::random_tree(2 + trial * 3, rng);
    const int n = t.vertex_count();
    std::vector<double> x(n), y(n), lx(n), ly(n), ones(n, 1.0), l1(n);
    for (auto& v : x) v = gauss(rng);
    for (auto& v : y) v = gauss(rng);
    apply_laplacian(t, x, lx);
    apply_laplacian(t, y, ly);
    apply_laplacian(t, ones, l1);
    EXPECT_NEAR(dot(lx, y), dot(x, ly), 1e-12 * (1 + std::abs(dot(lx, y))));
    EXPECT_GE(dot(x, lx), -1e-12);
    for (double v : l1) EXPECT_EQ(v, 0.0);
  }
}

TEST(FiedlerPair, RayleighMinimality) {
  std::mt19937_64 rng(30);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 50; ++trial) {
    const auto t = oracle::random_tree(2 + static_cast<int>(rng() % 39), rng);
    const int n = t.vertex_count();
    const double lambda2 = fiedler_pair(t).lambda;
    std::vector<double> x(n), lx(n);
    for (int rep = 0; rep < 1000; ++rep) {
      double mean = 0.0;
      for (auto& v : x) mean += (v = gauss(rng));
      mean /= n;
      for (auto& v : x) v -= mean;
      const double norm = norm2(x);
      for (auto& v : x) v /= norm;
      apply_laplacian(t, x, lx);
      ASSERT_GE(dot(x, lx), lambda2 - 1e-9);
    }
  }
}

TEST(FiedlerPair, DenseAndIterativeAgreeEntrywise) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 100 + static_cast<int>(rng() % 401);
    const auto t = oracle::random_tree(n, rng);
    const auto dense = fiedler_pair(t, {.path = SolverPath::dense});
    const auto iter = fiedler_pair(t, {.path = SolverPath::iterative});
    EXPECT_NEAR(dense.lambda, iter.lambda, 1e-8);
    if (dense.degenerate) continue;
    for (int v = 0; v < n; ++v) EXPECT_NEAR(std::abs(dense.phi[v]), std::abs(iter.phi[v]), 1e-6);
  }
}

TEST(FiedlerPair, InvariantsOnReturnedPairs) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 30; ++trial) {
    const auto t = oracle::random_tree(2 + trial * 5, rng);
    const auto p = fiedler_pair(t);
    EXPECT_NEAR(norm2(p.phi), 1.0, 1e-10);
    EXPECT_LE(eigen_residual(t, p.lambda, p.phi), 1e-9 * std::max(1.0, p.lambda));
    double s = 0.0;
    for (double x : p.phi) s += x;
    EXPECT_LE(std::abs(s), 1e-10 * std::sqrt(static_cast<double>(p.phi.size())));
  }
}

TEST(Verifiers, OrientationInvariant) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    const auto t = oracle::random_tree(3 + trial, rng);
    const auto p = fiedler_pair(t);
    auto q = p;
    for (auto& x : q.phi) x = -x;
    EXPECT_EQ(verify_fiedler_connectivity(t, p), verify_fiedler_connectivity(t, q));
    EXPECT_EQ(verify_monotonicity(t, p).status, verify_monotonicity(t, q).status);
  }
}

TEST(FiedlerConnectivity, RejectsAlternatingVector) {
  const auto g = gen_path(4);
  auto p = fiedler_pair(g);
  p.phi = {0.5, -0.5, 0.5, -0.5};
  EXPECT_FALSE(verify_fiedler_connectivity(g, p));
}

TEST(Bounds, StarAndPath) {
  const auto star = gen_rose(50);
  const auto b = bounds_report(star, fiedler_pair(star));
  EXPECT_TRUE(b.mckay_holds);
  EXPECT_NEAR(b.mckay_lower, 4.0 / (51 * 2), 1e-15);
  const auto p10 = gen_path(10);
  EXPECT_TRUE(bounds_report(p10, fiedler_pair(p10)).all_hold());
}
