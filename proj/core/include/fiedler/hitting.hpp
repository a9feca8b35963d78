#pragma once

#include <span>
#include <vector>

#include "fiedler/graph.hpp"

namespace fiedler {

struct HittingProfile {
  std::vector<Vertex> targets;  // sorted, unique
  std::vector<double> h;        // expected steps to the target set
  double hit_max = 0.0;
  Vertex argmax = 0;            // smallest vertex attaining hit_max
  double residual = 0.0;        // max |h(v) - 1 - mean_{u~v} h(u)| over non-targets
};

/// Exact expected hitting times of the simple random walk to `targets`.
HittingProfile hitting_times(const Graph& g, std::span<const Vertex> targets);

/// hit(G_{k,i}): the largest expected number of steps, over vertices of the
/// component, for the walk in g to reach the path. Requires an isolated
/// component; throws UnsupportedInputError otherwise.
double attachment_hit(const PathDecomposition& decomposition, const AttachedComponent& component,
                      const Graph& g);

/// diam * delta^diam, saturating to +infinity.
double proposition_bound(int delta, int diam);

/// Closed forms used as references: (k-1)^2 for a k-vertex path hit from one
/// end, 2n + 2 for a leaf of an n-petal rose attached to the target.
double path_hitting_time(int vertices);
double rose_hitting_time(int petals);

}  // namespace fiedler
