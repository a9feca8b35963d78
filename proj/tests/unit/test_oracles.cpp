// Sanity checks of the reference implementations themselves.
#include <gtest/gtest.h>

#include <cmath>

#include "fiedler/generators.hpp"
#include "oracles.hpp"

TEST(Oracles, JacobiOnSmallLaplacians) {
  const auto e = oracle::jacobi_eigen(oracle::laplacian(fiedler::gen_path(3)));
  EXPECT_NEAR(e.values[0], 0.0, 1e-12);
  EXPECT_NEAR(e.values[1], 1.0, 1e-12);
  EXPECT_NEAR(e.values[2], 3.0, 1e-12);
  const auto star = oracle::jacobi_eigen(oracle::laplacian(fiedler::gen_rose(3)));
  EXPECT_NEAR(star.values[1], 1.0, 1e-12);
  EXPECT_NEAR(star.values[2], 1.0, 1e-12);
  EXPECT_NEAR(star.values[3], 4.0, 1e-12);
}

TEST(Oracles, CountingFormulaKnownValues) {
  EXPECT_EQ(oracle::otter_free_trees(4), 2u);
  EXPECT_EQ(oracle::otter_free_trees(11), 235u);
  EXPECT_EQ(oracle::otter_free_trees(20), 823065u);
  EXPECT_EQ(oracle::otter_free_trees(22), 5623756u);
}

TEST(Oracles, LabeledClassesSmall) {
  EXPECT_EQ(oracle::labeled_tree_classes(4), 2u);
  EXPECT_EQ(oracle::labeled_tree_classes(6), 6u);
}

TEST(Oracles, HittingTimesPath) {
  const auto h = oracle::hitting_times(fiedler::gen_path(4), {0});
  EXPECT_NEAR(h[3], 9.0, 1e-12);
}
