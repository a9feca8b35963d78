#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fiedler/graph.hpp"

namespace fiedler {

/// Row-major dense matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0.0) {}

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  double& operator()(int i, int j) noexcept { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const noexcept { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  std::span<double> row(int i) noexcept { return {data_.data() + static_cast<std::size_t>(i) * cols_, static_cast<std::size_t>(cols_)}; }
  std::span<const double> row(int i) const noexcept { return {data_.data() + static_cast<std::size_t>(i) * cols_, static_cast<std::size_t>(cols_)}; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

double dot(std::span<const double> a, std::span<const double> b) noexcept;
double norm2(std::span<const double> a) noexcept;

/// Householder reduction A = Q T Q^T of a symmetric matrix to tridiagonal T.
class TridiagonalForm {
 public:
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;  // T(i, i+1), size n-1

  int size() const noexcept { return static_cast<int>(diagonal.size()); }

  /// y <- Q y: maps an eigenvector of T to an eigenvector of A.
  void apply_q(std::span<double> y) const;

 private:
  friend TridiagonalForm tridiagonalize(DenseMatrix a);
  // reflector k acts on indices k+1..n-1; empty when the column was already reduced
  std::vector<std::vector<double>> reflectors_;
  std::vector<double> taus_;
};

TridiagonalForm tridiagonalize(DenseMatrix a);

/// Eigenvalues of a symmetric tridiagonal matrix, ascending, by implicit QL
/// with Wilkinson-style shifts. Throws ConvergenceError after 30 sweeps on
/// one eigenvalue.
std::vector<double> tridiagonal_eigenvalues(std::span<const double> diagonal,
                                            std::span<const double> off_diagonal);

/// Unit eigenvector of the tridiagonal matrix for an (accurate) eigenvalue,
/// by inverse iteration with partial pivoting.
std::vector<double> tridiagonal_eigenvector(std::span<const double> diagonal,
                                            std::span<const double> off_diagonal, double lambda);

struct SymmetricEigen {
  std::vector<double> values;  // ascending
  DenseMatrix vectors;         // column j belongs to values[j]
};

/// Full eigendecomposition (tridiagonalization + implicit QL with rotation
/// accumulation). Intended for small matrices.
SymmetricEigen symmetric_eigen(const DenseMatrix& a);

/// Sparse symmetric positive definite solver for the principal submatrix of
/// the graph Laplacian on the `unknown` vertices:
///   deg(v) x(v) - sum_{u ~ v, u unknown} x(u) = rhs(v)
/// where deg is the degree in the full graph. The remaining vertices act as
/// absorbing (grounded) boundary. Factored once by LDL^T elimination in
/// greedy minimum-degree order, so trees factor without fill.
class GroundedLaplacianSolver {
 public:
  /// Throws SizeLimitError above kMaxVertices unknowns and
  /// DisconnectedGraphError when some unknown cannot reach the boundary.
  GroundedLaplacianSolver(const Graph& g, std::span<const char> unknown);

  static constexpr int kMaxVertices = 20000;

  /// Solves in place over full-length vectors; entries at boundary vertices
  /// are ignored on input and set to 0 on output. Up to three refinement
  /// steps follow, with residuals accumulated in long double.
  std::vector<double> solve(std::span<const double> rhs) const;

  /// max_v |residual(v)| / deg(v) over unknowns.
  double scaled_residual(std::span<const double> x, std::span<const double> rhs) const;

  int unknown_count() const noexcept { return static_cast<int>(order_.size()); }

 private:
  std::vector<double> solve_once(std::span<const double> rhs) const;

  const Graph* graph_;
  std::vector<char> unknown_;
  std::vector<Vertex> order_;            // elimination order
  std::vector<double> pivot_;            // D entry per vertex
  std::vector<int> factor_offsets_;      // per elimination step into factor_entries_
  std::vector<std::pair<Vertex, double>> factor_entries_;  // (j, l_jp)
};

}  // namespace fiedler
