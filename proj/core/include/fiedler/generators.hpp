#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fiedler/admissibility.hpp"
#include "fiedler/graph.hpp"

namespace fiedler {

/// Path on n vertices 0..n-1.
Graph gen_path(int n);

/// Hub 0 with `petals` leaves 1..petals (a star).
Graph gen_rose(int petals);

/// Path 0..d, hub d+1 joined to path vertex attach_pos, leaves d+2.. on the hub.
Graph gen_rose_on_path(int d, int attach_pos, int petals);

/// Path 0..d with a pendant path of stub_len edges at vertex d/2 (rounded down).
Graph gen_spine(int d, int stub_len);

/// gen_spine plus `leaves` pendant leaves on every stub vertex.
Graph gen_spine_with_leaves(int d, int stub_len, int leaves);

Graph gen_caterpillar(const CaterpillarSpec& spec);

/// Complete (delta-1)-ary tree of depth `levels` rooted at 0 (breadth-first
/// numbering) whose deepest vertices each get one extra edge to the root,
/// unless already adjacent to it.
Graph gen_drift_graph(int delta, int levels);

/// Uniform random labeled tree via a random Pruefer sequence.
Graph gen_random_tree(int n, std::uint64_t seed);

/// Random recursive tree where each new vertex joins a uniform vertex of
/// degree below max_degree.
Graph gen_random_bounded_degree_tree(int n, int max_degree, std::uint64_t seed);

std::vector<int> random_pruefer_sequence(int n, std::uint64_t seed);
Graph decode_pruefer(int n, std::span<const int> sequence);
/// Requires a tree with at least two vertices.
std::vector<int> encode_pruefer(const Graph& tree);

/// A family tag plus integer parameters, e.g. {"rose-on-path", {9, 3, 12}}.
struct FamilyParams {
  std::string family;
  std::vector<long long> params;
};

/// Parses "P_10", "path:10", "rose-on-path:9:3:12", ...
FamilyParams parse_family(std::string_view text);
Graph generate(const FamilyParams& params);
/// Human-readable list of families and their parameters.
std::string family_usage();

}  // namespace fiedler
