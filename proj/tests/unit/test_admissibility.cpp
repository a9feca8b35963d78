#include <gtest/gtest.h>

#include <random>

#include "fiedler/admissibility.hpp"
#include "fiedler/enumeration.hpp"
#include "fiedler/errors.hpp"
#include "fiedler/generators.hpp"
#include "oracles.hpp"

using namespace fiedler;

TEST(Theorem2Check, BarePathIsAdmissible) {
  const auto r = check_theorem2(gen_path(101));
  EXPECT_TRUE(r.admissible);
  EXPECT_TRUE(r.rows.empty());
  EXPECT_EQ(r.diameter, 100);
  EXPECT_EQ(r.path_hit, 100.0 * 100.0);
  EXPECT_LE(r.path_margin, 5.0);
}

TEST(Theorem2Check, PendantVertexInTheMiddle) {
  const auto r = check_theorem2(gen_rose_on_path(120, 60, 0));
  ASSERT_EQ(r.rows.size(), 1u);
  const auto& row = r.rows[0];
  EXPECT_EQ(row.anchor_position, 60);
  EXPECT_EQ(row.size, 1);
  EXPECT_DOUBLE_EQ(row.size_bound, 120.0 / 32.0);
  ASSERT_TRUE(row.hit);
  EXPECT_NEAR(*row.hit, 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(row.hit_bound, 72.0);
  EXPECT_TRUE(r.admissible);
  EXPECT_LE(r.lambda_hit_margin, 0.5);
}

TEST(Theorem2Check, PetalsOnPathAreAlsoAdmissibleInTheMiddle) {
  const auto r = check_theorem2(gen_rose_on_path(120, 60, 1));
  EXPECT_TRUE(r.admissible);
}

TEST(Theorem2Check, LargeRoseFailsSizeCondition) {
  const auto r = check_theorem2(gen_rose_on_path(40, 20, 12));
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_EQ(r.rows[0].size, 13);
  EXPECT_FALSE(r.rows[0].size_ok);
  EXPECT_FALSE(r.admissible);
}

TEST(Theorem2Check, EndpointAttachmentFailsHitCondition) {
  // leaf next to an end of the path sits at position 1, bound min{1, D-1}^2/50
  const auto r = check_theorem2(gen_rose_on_path(200, 1, 0));
  EXPECT_FALSE(r.admissible);
}

TEST(Theorem2Check, CertifiedPathOnGraphWithCycle) {
  std::vector<Edge> edges;
  const int d = 128;
  for (int v = 0; v < d; ++v) edges.emplace_back(v, v + 1);
  edges.insert(edges.end(), {{64, d + 1}, {64, d + 2}, {d + 1, d + 2}});
  const auto g = Graph::from_edges(d + 3, edges);
  std::vector<Vertex> path(d + 1);
  for (int v = 0; v <= d; ++v) path[v] = v;
  const auto r = check_theorem2(g, path);
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_EQ(r.rows[0].size, 2);
  ASSERT_TRUE(r.rows[0].hit);
  EXPECT_NEAR(*r.rows[0].hit, 2.0, 1e-9);  // triangle: 2 steps expected
  EXPECT_TRUE(r.admissible);
  const auto v = extrema_verdict(g, fiedler_pair(g));
  EXPECT_TRUE(v.relaxed);

  const std::vector<Vertex> bad{0, 1, 2};
  EXPECT_THROW(check_theorem2(g, bad), UnsupportedInputError);
}

TEST(Corollary2Check, Arithmetic) {
  CaterpillarSpec spec;
  spec.spine_length = 100;
  spec.leg_length.assign(101, 0);
  EXPECT_TRUE(check_corollary2(spec));
  spec.leg_length[50] = 2;
  EXPECT_TRUE(check_corollary2(spec));
  spec.leg_length[50] = 3;
  EXPECT_FALSE(check_corollary2(spec));
  spec.leg_length[50] = 0;
  spec.leg_length[0] = 1;
  EXPECT_FALSE(check_corollary2(spec));
  spec.leg_length.pop_back();
  EXPECT_THROW(spec.validate(), std::invalid_argument);
}

TEST(Corollary2Check, PassingCaterpillarsKeepExtremaAtEnds) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 30; ++trial) {
    CaterpillarSpec spec;
    spec.spine_length = 40 + static_cast<int>(rng() % 120);
    spec.leg_length.assign(spec.spine_length + 1, 0);
    for (int k = 0; k <= spec.spine_length; ++k) {
      const int cap = std::min(k, spec.spine_length - k) / 20;
      if (cap > 0 && rng() % 3 == 0) spec.leg_length[k] = 1 + static_cast<int>(rng() % cap);
    }
    ASSERT_TRUE(check_corollary2(spec));
    const auto g = gen_caterpillar(spec);
    const auto pair = fiedler_pair(g);
    if (pair.degenerate) continue;
    EXPECT_TRUE(extrema_verdict(g, pair).relaxed) << trial;
  }
}

TEST(ExtremaVerdict, PathIsStrict) {
  const auto g = gen_path(12);
  const auto v = extrema_verdict(g, fiedler_pair(g));
  EXPECT_TRUE(v.strict);
  EXPECT_TRUE(v.relaxed);
  EXPECT_EQ(v.argmax, std::vector<Vertex>{0});
  EXPECT_EQ(v.argmin, std::vector<Vertex>{11});
  EXPECT_EQ(distance_between_extrema(g, v), 11);
}

TEST(ExtremaVerdict, RoseOnPathFailsRelaxed) {
  const auto g = gen_rose_on_path(9, 3, 12);
  const auto pair = fiedler_pair(g);
  const auto v = extrema_verdict(g, pair);
  EXPECT_FALSE(v.relaxed);
  EXPECT_FALSE(v.strict);
  EXPECT_EQ(v.diameter, 9);
  // one extremum on the rose leaves, the other at the far end of the path
  const bool max_on_leaves = v.argmax.front() >= 11;
  const auto& leaves = max_on_leaves ? v.argmax : v.argmin;
  const auto& far = max_on_leaves ? v.argmin : v.argmax;
  EXPECT_EQ(leaves.size(), 12u);
  EXPECT_EQ(far, std::vector<Vertex>{9});
}

TEST(ExtremaVerdict, StarIsDegenerate) {
  const auto g = gen_rose(3);
  const auto v = extrema_verdict(g, fiedler_pair(g));
  EXPECT_TRUE(v.degenerate);
  EXPECT_EQ(v.diametral_pairs.size(), 3u);
  EXPECT_THROW(distance_between_extrema(g, v), UnsupportedInputError);
}

TEST(ExtremaVerdict, StrictImpliesRelaxedOnSmallTrees) {
  for (int n = 2; n <= 10; ++n) {
    for (const auto& t : enumerate_free_trees(n)) {
      const auto v = extrema_verdict(t, fiedler_pair(t));
      if (v.strict) EXPECT_TRUE(v.relaxed);
    }
  }
}

TEST(Theorem2Check, AdmissibleSmallTreesSatisfyProperty) {
  // for n <= 12 only bare paths pass, but the scan exercises the pipeline
  for (int n = 2; n <= 12; ++n) {
    for (const auto& t : enumerate_free_trees(n)) {
      const auto r = check_theorem2(t);
      const auto pair = fiedler_pair(t);
      if (r.admissible && !pair.degenerate) {
        EXPECT_TRUE(extrema_verdict(t, pair).relaxed);
        EXPECT_LE(r.lambda_hit_margin, 0.5 + 1e-9);
        EXPECT_LE(r.path_margin, 5.0 + 1e-9);
      }
    }
  }
}

TEST(Theorem2Check, SignChangeInsideAttachmentNeedsLargeAttachment) {
  for (int n = 3; n <= 12; ++n) {
    for (const auto& t : enumerate_free_trees(n)) {
      const auto pair = fiedler_pair(t);
      if (pair.degenerate) continue;
      const auto dec = decompose_along_path(t, longest_path(t));
      for (std::size_t k = 0; k < dec.attachments.size(); ++k) {
        const double anchor = pair.phi[dec.path[k]];
        for (const auto& c : dec.attachments[k]) {
          bool changes = false;
          for (Vertex v : c.vertices) changes |= (pair.phi[v] > kZeroTolerance && anchor < -kZeroTolerance) ||
                                                 (pair.phi[v] < -kZeroTolerance && anchor > kZeroTolerance);
          if (changes) EXPECT_GE(c.size(), dec.diameter() / 32.0);
        }
      }
    }
  }
}
