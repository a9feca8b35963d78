#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fiedler/graph.hpp"
#include "fiedler/linalg.hpp"

namespace fiedler {

/// Entries with |phi(v)| at or below this are treated as zero.
inline constexpr double kZeroTolerance = 1e-10;
/// Eigenvalue gaps at or below this mark the eigenpair as degenerate.
inline constexpr double kDegeneracyGap = 1e-8;
/// Graphs up to this size use the dense eigensolver.
inline constexpr int kDenseVertexLimit = 2000;

/// An eigenpair of L = D - A. k is 1-based (lambda_1 = 0).
struct EigenPair {
  int k = 0;
  double lambda = 0.0;
  std::vector<double> phi;  // unit l2 norm
  double residual = 0.0;    // ||L phi - lambda phi||_2
  std::optional<double> gap_to_next;
  std::optional<double> gap_to_previous;
  bool degenerate = false;
};

enum class SolverPath { automatic, dense, iterative };

struct SolverOptions {
  SolverPath path = SolverPath::automatic;
  int max_iterations = 0;    // 0 selects 10 * n
  double tolerance = 1e-10;  // residual target of the iterative path
};

/// y = L x
void apply_laplacian(const Graph& g, std::span<const double> x, std::span<double> y);
DenseMatrix laplacian_matrix(const Graph& g);
double eigen_residual(const Graph& g, double lambda, std::span<const double> phi);

/// All Laplacian eigenvalues, ascending (dense path).
std::vector<double> laplacian_spectrum(const Graph& g);

EigenPair fiedler_pair(const Graph& g, const SolverOptions& options = {});

/// k-th smallest eigenpair, 1 <= k <= n, dense path only.
EigenPair eigenpair_k(const Graph& g, int k);

/// Flips phi so the first entry with |phi(v)| > 1e-8 is positive.
void normalize_sign(std::vector<double>& phi);

/// Both sign sets {phi >= -tol} and {-phi >= -tol} induce connected subgraphs.
bool verify_fiedler_connectivity(const Graph& g, const EigenPair& pair);

struct MonotonicityVerdict {
  enum class Status { pass, fail, inconclusive };
  Status status = Status::pass;
  /// On failure, the offending edge (u, v) with v farther from the sign change.
  std::optional<Edge> witness;
  std::string reason;
};

/// Monotone growth away from the sign change and extrema at leaves (trees).
MonotonicityVerdict verify_monotonicity(const Graph& g, const EigenPair& pair);

struct BoundsReport {
  int n = 0;
  int diameter = 0;
  double lambda2 = 0.0;
  double linf = 0.0;           // max |phi|
  double positive_mass = 0.0;  // sum max(phi, 0)

  double mckay_lower = 0.0;       // 4 / (n D)
  double path_upper_exact = 0.0;  // 2 (1 - cos(pi / (D + 1)))
  double ten_over_d2 = 0.0;       // 10 / D^2
  double linf_bound = 0.0;        // 4 / sqrt(D)
  double positive_mass_lower = 0.0;  // sqrt(D) / 8

  bool mckay_holds = false;
  bool path_upper_holds = false;
  bool ten_over_d2_holds = false;
  bool linf_holds = false;
  bool positive_mass_holds = false;

  bool all_hold() const noexcept {
    return mckay_holds && path_upper_holds && ten_over_d2_holds && linf_holds && positive_mass_holds;
  }
};

BoundsReport bounds_report(const Graph& g, const EigenPair& pair);

}  // namespace fiedler
