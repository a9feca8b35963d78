#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "fiedler/errors.hpp"
#include "fiedler/linalg.hpp"

namespace fiedler {

GroundedLaplacianSolver::GroundedLaplacianSolver(const Graph& g, std::span<const char> unknown)
    : graph_(&g), unknown_(unknown.begin(), unknown.end()) {
  const int n = g.vertex_count();
  if (static_cast<int>(unknown_.size()) != n) throw std::invalid_argument("mask size mismatch");

  std::vector<Vertex> boundary;
  int count = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (unknown_[v]) {
      ++count;
    } else {
      boundary.push_back(v);
    }
  }
  if (count > kMaxVertices) {
    throw SizeLimitError("direct solve limited to " + std::to_string(kMaxVertices) +
                         " unknowns, got " + std::to_string(count));
  }
  if (count > 0 && boundary.empty()) throw std::invalid_argument("no absorbing vertex given");
  const auto reach = multi_source_distances(g, boundary);
  for (Vertex v = 0; v < n; ++v) {
    if (unknown_[v] && reach[v] < 0) {
      throw DisconnectedGraphError("vertex " + std::to_string(v) + " cannot reach the target set");
    }
  }

  std::vector<std::unordered_map<Vertex, double>> rows(n);
  pivot_.assign(n, 0.0);
  for (Vertex v = 0; v < n; ++v) {
    if (!unknown_[v]) continue;
    pivot_[v] = g.degree(v);
    for (Vertex u : g.neighbors(v)) {
      if (unknown_[u]) rows[v].emplace(u, -1.0);
    }
  }

  std::set<std::pair<int, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    if (unknown_[v]) queue.emplace(static_cast<int>(rows[v].size()), v);
  }

  order_.reserve(count);
  factor_offsets_.reserve(count + 1);
  factor_offsets_.push_back(0);
  std::vector<std::pair<Vertex, double>> nbrs;
  while (!queue.empty()) {
    const Vertex p = queue.begin()->second;
    queue.erase(queue.begin());
    const double d = pivot_[p];

    nbrs.assign(rows[p].begin(), rows[p].end());
    std::sort(nbrs.begin(), nbrs.end());
    rows[p].clear();
    for (const auto& [j, a_jp] : nbrs) {
      queue.erase({static_cast<int>(rows[j].size()), j});
      rows[j].erase(p);
    }
    for (std::size_t x = 0; x < nbrs.size(); ++x) {
      const auto [i, a_ip] = nbrs[x];
      pivot_[i] -= a_ip * a_ip / d;
      for (std::size_t y = x + 1; y < nbrs.size(); ++y) {
        const auto [j, a_jp] = nbrs[y];
        const double update = a_ip * a_jp / d;
        rows[i][j] -= update;
        rows[j][i] -= update;
      }
    }
    for (const auto& [j, a_jp] : nbrs) {
      queue.emplace(static_cast<int>(rows[j].size()), j);
      factor_entries_.emplace_back(j, a_jp / d);
    }
    order_.push_back(p);
    factor_offsets_.push_back(static_cast<int>(factor_entries_.size()));
  }
}

std::vector<double> GroundedLaplacianSolver::solve_once(std::span<const double> rhs) const {
  const int n = graph_->vertex_count();
  std::vector<double> y(n, 0.0);
  for (Vertex v = 0; v < n; ++v) {
    if (unknown_[v]) y[v] = rhs[v];
  }
  for (std::size_t t = 0; t < order_.size(); ++t) {
    const Vertex p = order_[t];
    for (int f = factor_offsets_[t]; f < factor_offsets_[t + 1]; ++f) {
      y[factor_entries_[f].first] -= factor_entries_[f].second * y[p];
    }
  }
  for (std::size_t t = order_.size(); t-- > 0;) {
    const Vertex p = order_[t];
    double s = y[p] / pivot_[p];
    for (int f = factor_offsets_[t]; f < factor_offsets_[t + 1]; ++f) {
      s -= factor_entries_[f].second * y[factor_entries_[f].first];
    }
    y[p] = s;
  }
  return y;
}

double GroundedLaplacianSolver::scaled_residual(std::span<const double> x,
                                                std::span<const double> rhs) const {
  double worst = 0.0;
  for (Vertex v = 0; v < graph_->vertex_count(); ++v) {
    if (!unknown_[v]) continue;
    double r = rhs[v] - graph_->degree(v) * x[v];
    for (Vertex u : graph_->neighbors(v)) {
      if (unknown_[u]) r += x[u];
    }
    worst = std::max(worst, std::abs(r) / graph_->degree(v));
  }
  return worst;
}

std::vector<double> GroundedLaplacianSolver::solve(std::span<const double> rhs) const {
  auto x = solve_once(rhs);
  const int n = graph_->vertex_count();
  // refinement with the residual accumulated in extended precision
  std::vector<double> r(n, 0.0);
  for (int step = 0; step < 3; ++step) {
    double scale = 0.0;
    for (Vertex v = 0; v < n; ++v) {
      if (!unknown_[v]) continue;
      long double t = static_cast<long double>(rhs[v]) - static_cast<long double>(graph_->degree(v)) * x[v];
      for (Vertex u : graph_->neighbors(v)) {
        if (unknown_[u]) t += x[u];
      }
      r[v] = static_cast<double>(t);
      scale = std::max(scale, std::abs(x[v]));
    }
    const auto dx = solve_once(r);
    double change = 0.0;
    for (Vertex v = 0; v < n; ++v) {
      x[v] += dx[v];
      change = std::max(change, std::abs(dx[v]));
    }
    if (change <= 4.0 * std::numeric_limits<double>::epsilon() * scale) break;
  }
  return x;
}

}  // namespace fiedler
