#include "fiedler/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "fiedler/errors.hpp"

namespace fiedler {

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  std::vector<int> degree(n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                  std::to_string(v));
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    ++degree[u];
    ++degree[v];
  }

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.targets_.resize(g.offsets_[n]);
  std::vector<int> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : edges) {
    g.targets_[fill[u]++] = v;
    g.targets_[fill[v]++] = u;
  }
  for (int v = 0; v < n; ++v) {
    auto first = g.targets_.begin() + g.offsets_[v];
    auto last = g.targets_.begin() + g.offsets_[v + 1];
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last) {
      throw std::invalid_argument("duplicate edge " + std::to_string(std::min(v, *dup)) + " " +
                                  std::to_string(std::max(v, *dup)));
    }
  }
  g.edge_count_ = static_cast<int>(edges.size());
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
  if (!contains(u) || !contains(v)) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_connected() const {
  const int n = vertex_count();
  if (n <= 1) return true;
  const Vertex src[] = {0};
  const auto dist = multi_source_distances(*this, src);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

void require_connected(const Graph& g) {
  if (!g.is_connected()) throw DisconnectedGraphError();
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Parses a nonnegative decimal integer token and advances s past it.
bool take_index(std::string_view& s, int& out) {
  s = s.substr(std::min(s.size(), s.find_first_not_of(" \t")));
  if (s.empty() || s.front() < '0' || s.front() > '9') return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc{}) return false;
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return s.empty() || s.front() == ' ' || s.front() == '\t';
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::vector<int> edge_line;
  int max_index = -1;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    int u = 0;
    int v = 0;
    std::string_view rest = line;
    if (!take_index(rest, u) || !take_index(rest, v) || !trim(rest).empty()) {
      throw ParseError(line_no, "expected two nonnegative integers, got '" + std::string(line) + "'");
    }
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    edges.emplace_back(std::min(u, v), std::max(u, v));
    edge_line.push_back(line_no);
    max_index = std::max({max_index, u, v});
  }
  if (edges.empty()) throw ParseError(0, "edge list is empty");

  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (edges[order[i]] == edges[order[i - 1]]) {
      const auto [u, v] = edges[order[i]];
      throw ParseError(edge_line[order[i]],
                       "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
  }
  return Graph::from_edges(max_index + 1, edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

bool is_tree(const Graph& g) {
  return g.edge_count() == g.vertex_count() - 1 && g.is_connected();
}

int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::vector<int> multi_source_distances(const Graph& g, std::span<const Vertex> sources) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<Vertex> queue;
  queue.reserve(g.vertex_count());
  for (Vertex s : sources) {
    if (dist[s] < 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  if (!g.contains(source)) throw std::invalid_argument("source vertex out of range");
  const Vertex src[] = {source};
  auto dist = multi_source_distances(g, src);
  if (std::any_of(dist.begin(), dist.end(), [](int d) { return d < 0; })) {
    throw DisconnectedGraphError();
  }
  return dist;
}

DiameterInfo diameter_and_diametral_pairs(const Graph& g) {
  DiameterInfo info;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    const auto dist = bfs_distances(g, u);
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      if (dist[v] > info.diameter) {
        info.diameter = dist[v];
        info.pairs.clear();
      }
      if (dist[v] == info.diameter && info.diameter > 0) info.pairs.emplace_back(u, v);
    }
  }
  return info;
}

Edge double_sweep_endpoints(const Graph& g) {
  auto farthest = [&](Vertex from) {
    const auto dist = bfs_distances(g, from);
    return static_cast<Vertex>(std::max_element(dist.begin(), dist.end()) - dist.begin());
  };
  const Vertex a = farthest(0);
  const Vertex b = farthest(a);
  return {std::min(a, b), std::max(a, b)};
}

std::vector<Vertex> shortest_path(const Graph& g, Vertex u, Vertex v) {
  // Walk from u towards v, always taking the smallest neighbor one step closer.
  const auto to_v = bfs_distances(g, v);
  std::vector<Vertex> path{u};
  Vertex cur = u;
  while (cur != v) {
    for (Vertex w : g.neighbors(cur)) {
      if (to_v[w] == to_v[cur] - 1) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

std::vector<Vertex> longest_path(const Graph& g) {
  if (!is_tree(g)) {
    throw UnsupportedInputError(
        "longest_path: graph is not a tree; supply a certified path to the decomposition API");
  }
  if (g.vertex_count() == 1) return {0};
  const auto info = diameter_and_diametral_pairs(g);
  std::vector<Vertex> best;
  for (auto [u, v] : info.pairs) {
    if (!best.empty() && u > best.front()) break;  // pairs are sorted by u
    auto candidate = shortest_path(g, u, v);
    if (best.empty() || candidate < best) best = std::move(candidate);
  }
  return best;
}

int PathDecomposition::attachment_count() const noexcept {
  int count = 0;
  for (const auto& at : attachments) count += static_cast<int>(at.size());
  return count;
}

bool PathDecomposition::all_isolated() const noexcept {
  for (const auto& at : attachments) {
    for (const auto& c : at) {
      if (!c.isolated) return false;
    }
  }
  return true;
}

PathDecomposition decompose_along_path(const Graph& g, std::span<const Vertex> path) {
  const int n = g.vertex_count();
  if (path.empty()) throw std::invalid_argument("path is empty");
  std::vector<int> position(n, -1);
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Vertex v = path[i];
    if (!g.contains(v)) throw std::invalid_argument("path vertex out of range");
    if (position[v] >= 0) throw std::invalid_argument("path repeats a vertex");
    if (i > 0 && !g.has_edge(path[i - 1], v)) {
      throw std::invalid_argument("consecutive path vertices are not adjacent");
    }
    position[v] = static_cast<int>(i);
  }

  PathDecomposition out;
  out.path.assign(path.begin(), path.end());
  out.attachments.resize(path.size());

  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < n; ++start) {
    if (position[start] >= 0 || seen[start]) continue;
    AttachedComponent comp;
    seen[start] = 1;
    stack.assign(1, start);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      comp.vertices.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (position[w] >= 0) {
          comp.touched_positions.push_back(position[w]);
        } else if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.vertices.begin(), comp.vertices.end());
    auto& touched = comp.touched_positions;
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    if (touched.empty()) {
      throw DisconnectedGraphError("component containing vertex " + std::to_string(start) +
                                   " does not touch the path");
    }
    comp.isolated = touched.size() == 1;
    comp.anchor_position = touched.front();
    out.attachments[comp.anchor_position].push_back(std::move(comp));
  }
  return out;
}

bool certifies_longest_path(const Graph& g, const PathDecomposition& decomposition) {
  const auto& path = decomposition.path;
  const int d = decomposition.diameter();
  for (std::size_t i = 0; i < path.size(); ++i) {
    for (std::size_t j = i + 2; j < path.size(); ++j) {
      if (g.has_edge(path[i], path[j])) return false;
    }
  }
  for (int k = 0; k <= d; ++k) {
    for (const auto& comp : decomposition.attachments[k]) {
      if (!comp.isolated || comp.size() > std::min(k, d - k)) return false;
    }
  }
  return true;
}

}  // namespace fiedler
