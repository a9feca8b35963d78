#include "fiedler/game.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "fiedler/errors.hpp"
#include "fiedler/linalg.hpp"
#include "fiedler/rng.hpp"

namespace fiedler {

void GameSpec::validate() const {
  if (!graph.contains(start) || !graph.contains(target)) {
    throw std::invalid_argument("game: start/target vertex out of range");
  }
  if (static_cast<int>(pair.phi.size()) != graph.vertex_count()) {
    throw std::invalid_argument("game: eigenvector length does not match the graph");
  }
  require_connected(graph);
}

namespace {

std::vector<char> all_but(int n, Vertex target) {
  std::vector<char> unknown(n, 1);
  unknown[target] = 0;
  return unknown;
}

struct BlockStats {
  std::int64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;
  std::int64_t truncated = 0;
  std::int64_t steps = 0;

  void add(double x) {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }

  // Chan et al. pairwise merge
  void merge(const BlockStats& o) {
    if (o.count == 0) return;
    const auto total = count + o.count;
    const double delta = o.mean - mean;
    mean += delta * static_cast<double>(o.count) / static_cast<double>(total);
    m2 += o.m2 + delta * delta * static_cast<double>(count) * static_cast<double>(o.count) /
                     static_cast<double>(total);
    count = total;
    truncated += o.truncated;
    steps += o.steps;
  }
};

constexpr std::int64_t kBlockSize = 4096;

}  // namespace

double exact_payoff(const GameSpec& spec) {
  spec.validate();
  if (spec.start == spec.target) return 0.0;
  const auto& g = spec.graph;
  const auto unknown = all_but(g.vertex_count(), spec.target);
  const GroundedLaplacianSolver solver(g, unknown);
  std::vector<double> rhs(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) rhs[v] = spec.pair.lambda * spec.pair.phi[v];
  return solver.solve(rhs)[spec.start];
}

PayoffEstimate simulate_payoff(const GameSpec& spec, const SimulationOptions& options) {
  if (options.samples < 1) throw std::invalid_argument("simulate_payoff: samples must be >= 1");
  spec.validate();
  PayoffEstimate est;
  est.samples = options.samples;
  est.seed = options.seed;
  est.exact = exact_payoff(spec);
  if (spec.start == spec.target) return est;

  const auto& g = spec.graph;
  const int n = g.vertex_count();
  std::vector<double> reward(n);
  for (Vertex v = 0; v < n; ++v) reward[v] = spec.pair.lambda * spec.pair.phi[v] / g.degree(v);

  const std::int64_t blocks = (options.samples + kBlockSize - 1) / kBlockSize;
  std::vector<BlockStats> partial(blocks);

  auto run_block = [&](std::int64_t b) {
    BlockStats stats;
    const std::int64_t first = b * kBlockSize;
    const std::int64_t last = std::min(options.samples, first + kBlockSize);
    for (std::int64_t s = first; s < last; ++s) {
      CounterRng rng(options.seed, static_cast<std::uint64_t>(s));
      double payoff = 0.0;
      Vertex w = spec.start;
      std::int64_t steps = 0;
      while (w != spec.target) {
        if (steps == options.max_steps) {
          ++stats.truncated;
          break;
        }
        payoff += reward[w];
        const auto nb = g.neighbors(w);
        w = nb[rng.below(nb.size())];
        ++steps;
      }
      stats.steps += steps;
      stats.add(payoff);
    }
    partial[b] = stats;
  };

  const int workers = std::max(1, std::min<int>(options.parallelism, static_cast<int>(blocks)));
  if (workers == 1) {
    for (std::int64_t b = 0; b < blocks; ++b) run_block(b);
  } else {
    std::atomic<std::int64_t> next{0};
    std::vector<std::jthread> pool;
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (auto b = next.fetch_add(1); b < blocks; b = next.fetch_add(1)) run_block(b);
      });
    }
  }

  BlockStats total;
  for (const auto& p : partial) total.merge(p);
  est.mc_mean = total.mean;
  est.mc_stderr = total.count > 1
                      ? std::sqrt(total.m2 / static_cast<double>(total.count - 1)) /
                            std::sqrt(static_cast<double>(total.count))
                      : 0.0;
  est.truncated_samples = total.truncated;
  est.max_steps_hit = total.truncated > 0;
  est.total_steps = total.steps;
  return est;
}

std::vector<double> expected_encounters(const Graph& g, Vertex target, Vertex start) {
  if (!g.contains(start) || !g.contains(target)) {
    throw std::invalid_argument("expected_encounters: vertex out of range");
  }
  require_connected(g);
  const int n = g.vertex_count();
  std::vector<double> visits(n, 0.0);
  if (start == target) return visits;
  // N = (I - Q)^{-1} = M^{-1} D with M the grounded Laplacian; M is
  // symmetric, so row `start` of N is (M^{-1} e_start) scaled by degrees.
  const GroundedLaplacianSolver solver(g, all_but(n, target));
  std::vector<double> unit(n, 0.0);
  unit[start] = 1.0;
  const auto column = solver.solve(unit);
  for (Vertex v = 0; v < n; ++v) visits[v] = v == target ? 0.0 : column[v] * g.degree(v);
  return visits;
}

}  // namespace fiedler
