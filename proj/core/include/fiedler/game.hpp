#pragma once

#include <cstdint>
#include <vector>

#include "fiedler/graph.hpp"
#include "fiedler/spectral.hpp"

namespace fiedler {

/// The payoff game: start at `start`; at every vertex w != target collect
/// lambda * phi(w) / deg(w) and step to a uniform random neighbor; stop at
/// `target`. Its expected payoff is phi(start) - phi(target).
struct GameSpec {
  const Graph& graph;
  const EigenPair& pair;
  Vertex start;
  Vertex target;

  /// Throws std::invalid_argument / DisconnectedGraphError on bad input.
  void validate() const;
};

/// Expected payoff from the absorbing linear system
///   E(w) = lambda phi(w)/deg(w) + mean_{u ~ w} E(u),  E(target) = 0.
double exact_payoff(const GameSpec& spec);

struct SimulationOptions {
  std::int64_t samples = 100000;
  std::uint64_t seed = 0;
  /// Per-sample step cap; walks reaching it keep their partial payoff.
  std::int64_t max_steps = 1'000'000'000;
  int parallelism = 1;
};

struct PayoffEstimate {
  double exact = 0.0;
  double mc_mean = 0.0;
  double mc_stderr = 0.0;  // sample standard deviation / sqrt(samples)
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  bool max_steps_hit = false;
  std::int64_t truncated_samples = 0;
  std::int64_t total_steps = 0;
};

/// Monte-Carlo estimate. Sample i draws from CounterRng(seed, i), and samples
/// are reduced in fixed blocks, so the result does not depend on parallelism.
PayoffEstimate simulate_payoff(const GameSpec& spec, const SimulationOptions& options);

/// Expected number of visits to each vertex (the start visit included) of the
/// walk from start absorbed at target. The target entry is 0.
std::vector<double> expected_encounters(const Graph& g, Vertex target, Vertex start);

}  // namespace fiedler
