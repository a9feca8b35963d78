#include "fiedler/generators.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <stdexcept>

#include "fiedler/rng.hpp"

namespace fiedler {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

void append_path(std::vector<Edge>& edges, Vertex from, Vertex first_new, int length) {
  Vertex prev = from;
  for (int i = 0; i < length; ++i) {
    edges.emplace_back(prev, first_new + i);
    prev = first_new + i;
  }
}

}  // namespace

Graph gen_path(int n) {
  require(n >= 1, "gen_path: n must be >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph gen_rose(int petals) {
  require(petals >= 1, "gen_rose: petals must be >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= petals; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(petals + 1, edges);
}

Graph gen_rose_on_path(int d, int attach_pos, int petals) {
  require(d >= 0 && petals >= 0, "gen_rose_on_path: negative parameter");
  require(attach_pos >= 0 && attach_pos <= d, "gen_rose_on_path: attach position out of range");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < d; ++v) edges.emplace_back(v, v + 1);
  const Vertex hub = d + 1;
  edges.emplace_back(attach_pos, hub);
  for (int i = 0; i < petals; ++i) edges.emplace_back(hub, hub + 1 + i);
  return Graph::from_edges(d + 2 + petals, edges);
}

Graph gen_spine(int d, int stub_len) { return gen_spine_with_leaves(d, stub_len, 0); }

Graph gen_spine_with_leaves(int d, int stub_len, int leaves) {
  require(d >= 0 && stub_len >= 0 && leaves >= 0, "gen_spine: negative parameter");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < d; ++v) edges.emplace_back(v, v + 1);
  append_path(edges, d / 2, d + 1, stub_len);
  Vertex next = d + 1 + stub_len;
  for (int s = 0; s < stub_len; ++s) {
    for (int l = 0; l < leaves; ++l) edges.emplace_back(d + 1 + s, next++);
  }
  return Graph::from_edges(next, edges);
}

Graph gen_caterpillar(const CaterpillarSpec& spec) {
  spec.validate();
  const int n = spec.spine_length;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, v + 1);
  Vertex next = n + 1;
  for (int k = 0; k <= n; ++k) {
    for (int leg = 0; leg < spec.legs_at(k); ++leg) {
      append_path(edges, k, next, spec.leg_length[k]);
      next += spec.leg_length[k];
    }
  }
  return Graph::from_edges(next, edges);
}

Graph gen_drift_graph(int delta, int levels) {
  require(delta >= 3, "gen_drift_graph: delta must be >= 3");
  require(levels >= 1, "gen_drift_graph: levels must be >= 1");
  const int arity = delta - 1;
  std::vector<Edge> edges;
  Vertex level_begin = 0;
  Vertex level_end = 1;
  Vertex next = 1;
  for (int depth = 0; depth < levels; ++depth) {
    for (Vertex parent = level_begin; parent < level_end; ++parent) {
      for (int c = 0; c < arity; ++c) edges.emplace_back(parent, next++);
    }
    level_begin = level_end;
    level_end = next;
  }
  if (levels >= 2) {
    for (Vertex leaf = level_begin; leaf < level_end; ++leaf) edges.emplace_back(0, leaf);
  }
  return Graph::from_edges(next, edges);
}

std::vector<int> random_pruefer_sequence(int n, std::uint64_t seed) {
  require(n >= 1, "random_pruefer_sequence: n must be >= 1");
  CounterRng rng(seed, 0x7072756566657200ULL);
  std::vector<int> seq(std::max(0, n - 2));
  for (auto& x : seq) x = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
  return seq;
}

Graph decode_pruefer(int n, std::span<const int> sequence) {
  require(n >= 1, "decode_pruefer: n must be >= 1");
  require(static_cast<int>(sequence.size()) == std::max(0, n - 2), "decode_pruefer: wrong length");
  if (n == 1) return Graph::from_edges(1, {});
  std::vector<int> degree(n, 1);
  for (int x : sequence) {
    require(x >= 0 && x < n, "decode_pruefer: label out of range");
    ++degree[x];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  for (int x : sequence) {
    const int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1) leaves.push(x);
  }
  const int a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return Graph::from_edges(n, edges);
}

std::vector<int> encode_pruefer(const Graph& tree) {
  const int n = tree.vertex_count();
  require(n >= 2 && is_tree(tree), "encode_pruefer: input must be a tree with >= 2 vertices");
  std::vector<int> degree(n);
  std::vector<char> removed(n, 0);
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = tree.degree(v);
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<int> seq;
  seq.reserve(n - 2);
  while (static_cast<int>(seq.size()) < n - 2) {
    const int leaf = leaves.top();
    leaves.pop();
    removed[leaf] = 1;
    for (Vertex u : tree.neighbors(leaf)) {
      if (removed[u]) continue;
      seq.push_back(u);
      if (--degree[u] == 1) leaves.push(u);
    }
  }
  return seq;
}

Graph gen_random_tree(int n, std::uint64_t seed) {
  return decode_pruefer(n, random_pruefer_sequence(n, seed));
}

Graph gen_random_bounded_degree_tree(int n, int max_degree, std::uint64_t seed) {
  require(n >= 1, "gen_random_bounded_degree_tree: n must be >= 1");
  require(max_degree >= 2 || n <= 2, "gen_random_bounded_degree_tree: max_degree too small");
  CounterRng rng(seed, 0x626f756e646564ULL);
  std::vector<int> degree(n, 0);
  std::vector<Vertex> open{0};  // vertices with spare degree
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    const auto slot = rng.below(open.size());
    const Vertex parent = open[slot];
    edges.emplace_back(parent, v);
    if (++degree[parent] == max_degree) {
      open[slot] = open.back();
      open.pop_back();
    }
    ++degree[v];
    if (degree[v] < max_degree) open.push_back(v);
  }
  return Graph::from_edges(n, edges);
}

FamilyParams parse_family(std::string_view text) {
  FamilyParams out;
  if (text.size() > 2 && (text.starts_with("P_") || text.starts_with("p_"))) {
    out.family = "path";
    text.remove_prefix(2);
  } else {
    const auto colon = text.find(':');
    out.family = std::string(text.substr(0, colon));
    text = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  }
  while (!text.empty()) {
    const auto colon = text.find(':');
    const auto token = text.substr(0, colon);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw std::invalid_argument("bad family parameter '" + std::string(token) + "'");
    }
    out.params.push_back(value);
    text = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  }
  return out;
}

Graph generate(const FamilyParams& fp) {
  const auto& p = fp.params;
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (p.size() < lo || p.size() > hi) {
      throw std::invalid_argument("family '" + fp.family + "' takes " + std::to_string(lo) +
                                  (lo == hi ? "" : "-" + std::to_string(hi)) + " parameters");
    }
  };
  auto i = [&](std::size_t k) { return static_cast<int>(p[k]); };
  const auto& f = fp.family;
  if (f == "path") {
    arity(1, 1);
    return gen_path(i(0));
  }
  if (f == "rose" || f == "star") {
    arity(1, 1);
    return gen_rose(i(0));
  }
  if (f == "rose-on-path") {
    arity(3, 3);
    return gen_rose_on_path(i(0), i(1), i(2));
  }
  if (f == "spine") {
    arity(2, 2);
    return gen_spine(i(0), i(1));
  }
  if (f == "spine-leaves") {
    arity(3, 3);
    return gen_spine_with_leaves(i(0), i(1), i(2));
  }
  if (f == "caterpillar") {
    // spine length, then one leg length per position
    arity(1, static_cast<std::size_t>(-1));
    CaterpillarSpec spec;
    spec.spine_length = i(0);
    spec.leg_length.assign(static_cast<std::size_t>(std::max(0, spec.spine_length)) + 1, 0);
    if (p.size() > 1) {
      if (p.size() - 1 != spec.leg_length.size()) {
        throw std::invalid_argument("caterpillar: expected spine_length + 1 leg lengths");
      }
      for (std::size_t k = 1; k < p.size(); ++k) spec.leg_length[k - 1] = i(k);
    }
    return gen_caterpillar(spec);
  }
  if (f == "drift") {
    arity(2, 2);
    return gen_drift_graph(i(0), i(1));
  }
  if (f == "random") {
    arity(2, 2);
    return gen_random_tree(i(0), static_cast<std::uint64_t>(p[1]));
  }
  if (f == "random-bounded") {
    arity(3, 3);
    return gen_random_bounded_degree_tree(i(0), i(1), static_cast<std::uint64_t>(p[2]));
  }
  throw std::invalid_argument("unknown family '" + f + "'\n" + family_usage());
}

std::string family_usage() {
  return "families:\n"
         "  path N | P_N             path on N vertices\n"
         "  rose PETALS | star N     hub with PETALS leaves\n"
         "  rose-on-path D POS PETALS\n"
         "  spine D STUB\n"
         "  spine-leaves D STUB LEAVES\n"
         "  caterpillar N [F0 .. FN] one leg of length F(k) at spine position k\n"
         "  drift DELTA LEVELS\n"
         "  random N SEED\n"
         "  random-bounded N MAXDEG SEED\n";
}

}  // namespace fiedler
