#include "fiedler/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fiedler/errors.hpp"
#include "fiedler/rng.hpp"

namespace fiedler {

void apply_laplacian(const Graph& g, std::span<const double> x, std::span<double> y) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    double s = g.degree(v) * x[v];
    for (Vertex u : g.neighbors(v)) s -= x[u];
    y[v] = s;
  }
}

DenseMatrix laplacian_matrix(const Graph& g) {
  const int n = g.vertex_count();
  DenseMatrix l(n, n);
  for (Vertex v = 0; v < n; ++v) {
    l(v, v) = g.degree(v);
    for (Vertex u : g.neighbors(v)) l(v, u) = -1.0;
  }
  return l;
}

double eigen_residual(const Graph& g, double lambda, std::span<const double> phi) {
  double r2 = 0.0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    double s = (g.degree(v) - lambda) * phi[v];
    for (Vertex u : g.neighbors(v)) s -= phi[u];
    r2 += s * s;
  }
  return std::sqrt(r2);
}

std::vector<double> laplacian_spectrum(const Graph& g) {
  const auto tri = tridiagonalize(laplacian_matrix(g));
  return tridiagonal_eigenvalues(tri.diagonal, tri.off_diagonal);
}

void normalize_sign(std::vector<double>& phi) {
  for (double x : phi) {
    if (std::abs(x) > 1e-8) {
      if (x < 0) {
        for (auto& y : phi) y = -y;
      }
      return;
    }
  }
}

namespace {

void project_out_constant(std::vector<double>& x) {
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(x.size());
  for (auto& v : x) v -= mean;
}

void normalize(std::vector<double>& x) {
  const double nrm = norm2(x);
  for (auto& v : x) v /= nrm;
}

void fill_gaps(EigenPair& pair, std::span<const double> spectrum) {
  const int n = static_cast<int>(spectrum.size());
  const int idx = pair.k - 1;
  if (idx + 1 < n) pair.gap_to_next = std::abs(spectrum[idx + 1] - spectrum[idx]);
  if (idx > 0) pair.gap_to_previous = std::abs(spectrum[idx] - spectrum[idx - 1]);
  pair.degenerate = (pair.gap_to_next && *pair.gap_to_next <= kDegeneracyGap) ||
                    (pair.gap_to_previous && *pair.gap_to_previous <= kDegeneracyGap);
}

EigenPair dense_eigenpair(const Graph& g, int k) {
  const int n = g.vertex_count();
  EigenPair pair;
  pair.k = k;
  if (k == 1) {
    pair.lambda = 0.0;
    pair.phi.assign(n, 1.0 / std::sqrt(static_cast<double>(n)));
    if (n > 1) {
      const auto spectrum = laplacian_spectrum(g);
      fill_gaps(pair, spectrum);
    }
    pair.residual = eigen_residual(g, 0.0, pair.phi);
    return pair;
  }

  const auto tri = tridiagonalize(laplacian_matrix(g));
  const auto spectrum = tridiagonal_eigenvalues(tri.diagonal, tri.off_diagonal);
  pair.lambda = std::max(0.0, spectrum[k - 1]);
  pair.phi = tridiagonal_eigenvector(tri.diagonal, tri.off_diagonal, spectrum[k - 1]);
  tri.apply_q(pair.phi);
  if (g.is_connected()) project_out_constant(pair.phi);
  normalize(pair.phi);
  normalize_sign(pair.phi);
  fill_gaps(pair, spectrum);
  pair.residual = eigen_residual(g, pair.lambda, pair.phi);
  if (pair.residual > 1e-9 * std::max(1.0, pair.lambda)) {
    throw ConvergenceError("dense eigenvector for k=" + std::to_string(k) + " is inaccurate",
                           pair.residual);
  }
  return pair;
}

// Block inverse iteration on the constant-deflated Laplacian with
// Rayleigh-Ritz extraction. L^+ is applied through a grounded elimination.
EigenPair iterative_fiedler(const Graph& g, const SolverOptions& options) {
  const int n = g.vertex_count();
  const int block = std::min(n - 1, 4);
  const int max_iterations = options.max_iterations > 0 ? options.max_iterations : 10 * n;

  std::vector<char> unknown(n, 1);
  unknown[0] = 0;
  const GroundedLaplacianSolver solver(g, unknown);

  CounterRng rng(0x5eedf1ed1e5ULL, static_cast<std::uint64_t>(n));
  std::vector<std::vector<double>> basis(block, std::vector<double>(n));
  for (auto& col : basis) {
    for (auto& x : col) x = rng.uniform() - 0.5;
  }

  auto orthonormalize = [&] {
    for (int j = 0; j < block; ++j) {
      for (int pass = 0; pass < 2; ++pass) {
        project_out_constant(basis[j]);
        for (int i = 0; i < j; ++i) {
          const double c = dot(basis[i], basis[j]);
          for (int v = 0; v < n; ++v) basis[j][v] -= c * basis[i][v];
        }
      }
      normalize(basis[j]);
    }
  };
  orthonormalize();

  std::vector<std::vector<double>> image(block, std::vector<double>(n));
  double last_residual = 0.0;
  for (int iter = 1; iter <= max_iterations; ++iter) {
    for (int j = 0; j < block; ++j) {
      basis[j] = solver.solve(basis[j]);
      basis[j][0] = 0.0;
    }
    orthonormalize();

    DenseMatrix h(block, block);
    for (int j = 0; j < block; ++j) apply_laplacian(g, basis[j], image[j]);
    for (int i = 0; i < block; ++i) {
      for (int j = 0; j < block; ++j) h(i, j) = 0.5 * (dot(basis[i], image[j]) + dot(basis[j], image[i]));
    }
    const auto ritz = symmetric_eigen(h);
    std::vector<std::vector<double>> rotated(block, std::vector<double>(n, 0.0));
    for (int j = 0; j < block; ++j) {
      for (int i = 0; i < block; ++i) {
        const double c = ritz.vectors(i, j);
        for (int v = 0; v < n; ++v) rotated[j][v] += c * basis[i][v];
      }
    }
    basis = std::move(rotated);

    last_residual = eigen_residual(g, ritz.values[0], basis[0]);
    const bool second_ok = block < 2 || eigen_residual(g, ritz.values[1], basis[1]) <= 1e-8;
    if (last_residual <= options.tolerance && second_ok) {
      EigenPair pair;
      pair.k = 2;
      pair.lambda = ritz.values[0];
      pair.phi = basis[0];
      normalize(pair.phi);
      normalize_sign(pair.phi);
      pair.residual = eigen_residual(g, pair.lambda, pair.phi);
      pair.gap_to_previous = pair.lambda;
      if (block >= 2) pair.gap_to_next = std::abs(ritz.values[1] - ritz.values[0]);
      pair.degenerate = (pair.gap_to_next && *pair.gap_to_next <= kDegeneracyGap) ||
                        pair.lambda <= kDegeneracyGap;
      return pair;
    }
  }
  throw ConvergenceError("inverse iteration did not converge in " + std::to_string(max_iterations) +
                             " iterations",
                         last_residual);
}

}  // namespace

EigenPair fiedler_pair(const Graph& g, const SolverOptions& options) {
  const int n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("fiedler_pair needs at least two vertices");
  require_connected(g);
  const bool dense = options.path == SolverPath::dense ||
                     (options.path == SolverPath::automatic && n <= kDenseVertexLimit);
  if (dense) return dense_eigenpair(g, 2);
  if (n == 2) return dense_eigenpair(g, 2);
  return iterative_fiedler(g, options);
}

EigenPair eigenpair_k(const Graph& g, int k) {
  const int n = g.vertex_count();
  if (k < 1 || k > n) throw std::invalid_argument("eigenpair_k: rank out of range");
  if (n > kDenseVertexLimit) {
    throw SizeLimitError("eigenpair_k is dense only (n <= " + std::to_string(kDenseVertexLimit) + ")");
  }
  require_connected(g);
  return dense_eigenpair(g, k);
}

namespace {

bool induces_connected(const Graph& g, const std::vector<char>& keep) {
  Vertex start = -1;
  int count = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (keep[v]) {
      ++count;
      if (start < 0) start = v;
    }
  }
  if (count <= 1) return true;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  int reached = 0;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    ++reached;
    for (Vertex w : g.neighbors(u)) {
      if (keep[w] && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return reached == count;
}

}  // namespace

bool verify_fiedler_connectivity(const Graph& g, const EigenPair& pair) {
  const int n = g.vertex_count();
  std::vector<char> nonneg(n), nonpos(n);
  for (Vertex v = 0; v < n; ++v) {
    nonneg[v] = pair.phi[v] >= -kZeroTolerance;
    nonpos[v] = -pair.phi[v] >= -kZeroTolerance;
  }
  return induces_connected(g, nonneg) && induces_connected(g, nonpos);
}

MonotonicityVerdict verify_monotonicity(const Graph& g, const EigenPair& pair) {
  if (!is_tree(g)) throw UnsupportedInputError("verify_monotonicity requires a tree");
  MonotonicityVerdict verdict;
  if (pair.degenerate) {
    verdict.status = MonotonicityVerdict::Status::inconclusive;
    verdict.reason = "inconclusive: degenerate";
    return verdict;
  }
  const int n = g.vertex_count();
  const auto& phi = pair.phi;

  // (a) on each sign side, values grow strictly away from the other side
  for (const double sign : {1.0, -1.0}) {
    std::vector<Vertex> other;
    for (Vertex v = 0; v < n; ++v) {
      if (sign * phi[v] < -kZeroTolerance) other.push_back(v);
    }
    if (other.empty()) continue;
    const auto dist = multi_source_distances(g, other);
    for (auto [a, b] : g.edges()) {
      if (sign * phi[a] <= kZeroTolerance || sign * phi[b] <= kZeroTolerance) continue;
      if (dist[a] == dist[b]) continue;
      const Vertex near = dist[a] < dist[b] ? a : b;
      const Vertex far = dist[a] < dist[b] ? b : a;
      if (!(sign * phi[far] > sign * phi[near] - 1e-12)) {
        verdict.status = MonotonicityVerdict::Status::fail;
        verdict.witness = Edge{near, far};
        verdict.reason = "value decreases away from the sign change";
        return verdict;
      }
    }
  }

  // (b) extrema sit at leaves
  const double hi = *std::max_element(phi.begin(), phi.end());
  const double lo = *std::min_element(phi.begin(), phi.end());
  for (Vertex v = 0; v < n; ++v) {
    const bool extreme = phi[v] >= hi - 1e-9 || phi[v] <= lo + 1e-9;
    if (extreme && g.degree(v) != 1) {
      verdict.status = MonotonicityVerdict::Status::fail;
      verdict.witness = Edge{v, v};
      verdict.reason = "extremum at vertex " + std::to_string(v) + " of degree " +
                       std::to_string(g.degree(v));
      return verdict;
    }
  }
  return verdict;
}

BoundsReport bounds_report(const Graph& g, const EigenPair& pair) {
  BoundsReport r;
  r.n = g.vertex_count();
  r.diameter = diameter_and_diametral_pairs(g).diameter;
  r.lambda2 = pair.lambda;
  for (double x : pair.phi) {
    r.linf = std::max(r.linf, std::abs(x));
    r.positive_mass += std::max(x, 0.0);
  }
  const double d = r.diameter;
  r.mckay_lower = 4.0 / (r.n * d);
  r.path_upper_exact = 2.0 * (1.0 - std::cos(std::numbers::pi / (d + 1.0)));
  r.ten_over_d2 = 10.0 / (d * d);
  r.linf_bound = 4.0 / std::sqrt(d);
  r.positive_mass_lower = std::sqrt(d) / 8.0;

  constexpr double slack = 1e-12;
  r.mckay_holds = r.lambda2 >= r.mckay_lower - slack;
  r.path_upper_holds = r.lambda2 <= r.path_upper_exact + slack;
  r.ten_over_d2_holds = r.lambda2 <= r.ten_over_d2 + slack;
  r.linf_holds = r.linf <= r.linf_bound + slack;
  r.positive_mass_holds = r.positive_mass >= r.positive_mass_lower - slack;
  return r;
}

}  // namespace fiedler
