#include "fiedler/hitting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "fiedler/errors.hpp"
#include "fiedler/linalg.hpp"

namespace fiedler {

HittingProfile hitting_times(const Graph& g, std::span<const Vertex> targets) {
  if (targets.empty()) throw std::invalid_argument("hitting_times: empty target set");
  const int n = g.vertex_count();
  HittingProfile profile;
  profile.targets.assign(targets.begin(), targets.end());
  std::sort(profile.targets.begin(), profile.targets.end());
  profile.targets.erase(std::unique(profile.targets.begin(), profile.targets.end()),
                        profile.targets.end());

  std::vector<char> unknown(n, 1);
  for (Vertex t : profile.targets) {
    if (!g.contains(t)) throw std::invalid_argument("hitting_times: target out of range");
    unknown[t] = 0;
  }
  const GroundedLaplacianSolver solver(g, unknown);
  std::vector<double> rhs(n);
  for (Vertex v = 0; v < n; ++v) rhs[v] = g.degree(v);
  profile.h = solver.solve(rhs);
  profile.residual = solver.scaled_residual(profile.h, rhs);
  if (profile.residual > 1e-8) {
    throw ConvergenceError("hitting_times: residual check failed", profile.residual);
  }
  const auto best = std::max_element(profile.h.begin(), profile.h.end());
  profile.hit_max = *best;
  profile.argmax = static_cast<Vertex>(best - profile.h.begin());
  return profile;
}

double attachment_hit(const PathDecomposition& decomposition, const AttachedComponent& component,
                      const Graph& g) {
  if (!component.isolated) {
    throw UnsupportedInputError("attachment_hit: component touches more than one path vertex");
  }
  const Vertex anchor = decomposition.path.at(component.anchor_position);
  // Only the component is unknown; by isolation every edge leaving it ends at
  // the anchor, so grounding everything else equals grounding the anchor.
  std::vector<char> unknown(g.vertex_count(), 0);
  for (Vertex v : component.vertices) unknown[v] = 1;
  for (Vertex v : component.vertices) {
    for (Vertex u : g.neighbors(v)) {
      if (!unknown[u] && u != anchor) {
        throw UnsupportedInputError("attachment_hit: component is not isolated");
      }
    }
  }
  const GroundedLaplacianSolver solver(g, unknown);
  std::vector<double> rhs(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) rhs[v] = g.degree(v);
  const auto h = solver.solve(rhs);
  double best = 0.0;
  for (Vertex v : component.vertices) best = std::max(best, h[v]);
  return best;
}

double proposition_bound(int delta, int diam) {
  if (delta < 1 || diam < 0) throw std::invalid_argument("proposition_bound: bad arguments");
  const double value = diam * std::pow(static_cast<double>(delta), diam);
  return std::isfinite(value) ? value : std::numeric_limits<double>::infinity();
}

double path_hitting_time(int vertices) {
  const double k = vertices - 1;
  return k * k;
}

double rose_hitting_time(int petals) { return 2.0 * petals + 2.0; }

}  // namespace fiedler
