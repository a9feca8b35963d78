#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fiedler {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph stored as sorted adjacency lists (CSR).
class Graph {
 public:
  /// Builds a graph on vertices 0..n-1. Throws std::invalid_argument on
  /// self-loops, duplicate edges or out-of-range endpoints.
  static Graph from_edges(int n, std::span<const Edge> edges);

  Graph() = default;

  int vertex_count() const noexcept { return static_cast<int>(offsets_.size()) - 1; }
  int edge_count() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const noexcept;
  bool contains(Vertex v) const noexcept { return v >= 0 && v < vertex_count(); }

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool is_connected() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<int> offsets_{0};
  std::vector<Vertex> targets_;
  int edge_count_ = 0;
};

/// Throws DisconnectedGraphError unless g is connected.
void require_connected(const Graph& g);

// Edge-list text: one "u v" pair per line, '#' starts a comment, blank lines
// are ignored. The vertex set is 0..max index.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// graph6 interchange format (upper-triangle bit packing, 6 bits per byte
// offset by 63).
Graph decode_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

bool is_tree(const Graph& g);

int max_degree(const Graph& g);

/// Unweighted shortest-path distances from source. Throws
/// DisconnectedGraphError if some vertex is unreachable.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Multi-source distances; unreachable vertices get -1.
std::vector<int> multi_source_distances(const Graph& g, std::span<const Vertex> sources);

struct DiameterInfo {
  int diameter = 0;
  /// All unordered diametral pairs {u, v}, stored with u < v, sorted.
  std::vector<Edge> pairs;
};

/// All-source traversal. Requires a connected graph.
DiameterInfo diameter_and_diametral_pairs(const Graph& g);

/// Endpoints found by two successive traversals (farthest from 0, then
/// farthest from that). For trees this pair is diametral.
Edge double_sweep_endpoints(const Graph& g);

/// Some shortest path from u to v (lexicographically smallest by vertex index).
std::vector<Vertex> shortest_path(const Graph& g, Vertex u, Vertex v);

/// Longest path of a tree. Among several longest paths the lexicographically
/// smallest sequence is returned, oriented so the smaller endpoint comes first.
/// Throws UnsupportedInputError for graphs that are not trees.
std::vector<Vertex> longest_path(const Graph& g);

/// A connected piece of G minus the path, hanging off path position
/// anchor_position (edge distance from path.front()).
struct AttachedComponent {
  int anchor_position = 0;
  std::vector<Vertex> vertices;  // sorted
  bool isolated = true;          // touches exactly one path vertex
  /// Every path position the component touches; size 1 iff isolated.
  std::vector<int> touched_positions;

  int size() const noexcept { return static_cast<int>(vertices.size()); }
};

struct PathDecomposition {
  std::vector<Vertex> path;
  /// attachments[k] lists the components anchored at path[k].
  std::vector<std::vector<AttachedComponent>> attachments;

  int diameter() const noexcept { return static_cast<int>(path.size()) - 1; }
  int attachment_count() const noexcept;
  bool all_isolated() const noexcept;
};

/// Throws std::invalid_argument if path is not a simple path of g.
PathDecomposition decompose_along_path(const Graph& g, std::span<const Vertex> path);

/// Sufficient certificate that the decomposed path is a longest path of g:
/// the path is chordless, every attachment is isolated and an attachment at
/// position k has at most min{k, D-k} vertices.
bool certifies_longest_path(const Graph& g, const PathDecomposition& decomposition);

}  // namespace fiedler
