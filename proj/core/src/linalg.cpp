#include "fiedler/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "fiedler/errors.hpp"
#include "fiedler/rng.hpp"

namespace fiedler {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Implicit QL on (d, e) where e[i] = T(i, i+1) and e[n-1] = 0. When z is
// given, the plane rotations are accumulated into its columns.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, DenseMatrix* z) {
  const int n = static_cast<int>(d.size());
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= kEps * dd) break;
      }
      if (m == l) break;
      if (iter++ == 30) {
        throw ConvergenceError("implicit QL did not converge for eigenvalue " + std::to_string(l),
                               std::abs(e[l]));
      }
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool deflated = false;
      for (int i = m - 1; i >= l; --i) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          // underflow: the matrix split, restart on the smaller block
          d[i + 1] -= p;
          e[m] = 0.0;
          deflated = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        if (z != nullptr) {
          for (int k = 0; k < z->rows(); ++k) {
            f = (*z)(k, i + 1);
            (*z)(k, i + 1) = s * (*z)(k, i) + c * f;
            (*z)(k, i) = c * (*z)(k, i) - s * f;
          }
        }
      }
      if (deflated) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
}

}  // namespace

double dot(std::span<const double> a, std::span<const double> b) noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(std::span<const double> a) noexcept { return std::sqrt(dot(a, a)); }

TridiagonalForm tridiagonalize(DenseMatrix a) {
  const int n = a.rows();
  TridiagonalForm out;
  out.reflectors_.resize(std::max(0, n - 2));
  out.taus_.assign(std::max(0, n - 2), 0.0);

  std::vector<double> p(n);
  for (int k = 0; k + 2 < n; ++k) {
    const int m = n - k - 1;
    double tail = 0.0;
    for (int i = k + 2; i < n; ++i) tail += a(i, k) * a(i, k);
    if (tail == 0.0) continue;  // column already reduced

    const double x0 = a(k + 1, k);
    const double alpha = -std::copysign(std::sqrt(tail + x0 * x0), x0);
    std::vector<double> v(m);
    v[0] = x0 - alpha;
    for (int i = 1; i < m; ++i) v[i] = a(k + 1 + i, k);
    const double tau = 2.0 / (v[0] * v[0] + tail);

    // p = tau * B v ; w = p - (tau/2)(v^T p) v ; B -= v w^T + w v^T
    for (int i = 0; i < m; ++i) {
      const auto row = a.row(k + 1 + i).subspan(k + 1, m);
      p[i] = tau * dot(row, v);
    }
    const double half = 0.5 * tau * dot(std::span<const double>(p.data(), m), v);
    for (int i = 0; i < m; ++i) p[i] -= half * v[i];
    for (int i = 0; i < m; ++i) {
      auto row = a.row(k + 1 + i).subspan(k + 1, m);
      const double vi = v[i];
      const double wi = p[i];
      for (int j = 0; j < m; ++j) row[j] -= vi * p[j] + wi * v[j];
    }
    a(k + 1, k) = alpha;
    a(k, k + 1) = alpha;
    for (int i = k + 2; i < n; ++i) {
      a(i, k) = 0.0;
      a(k, i) = 0.0;
    }
    out.reflectors_[k] = std::move(v);
    out.taus_[k] = tau;
  }

  out.diagonal.resize(n);
  out.off_diagonal.resize(std::max(0, n - 1));
  for (int i = 0; i < n; ++i) out.diagonal[i] = a(i, i);
  for (int i = 0; i + 1 < n; ++i) out.off_diagonal[i] = 0.5 * (a(i + 1, i) + a(i, i + 1));
  return out;
}

void TridiagonalForm::apply_q(std::span<double> y) const {
  for (int k = static_cast<int>(reflectors_.size()) - 1; k >= 0; --k) {
    const auto& v = reflectors_[k];
    if (v.empty()) continue;
    auto seg = y.subspan(k + 1, v.size());
    const double scale = taus_[k] * dot(seg, v);
    for (std::size_t i = 0; i < v.size(); ++i) seg[i] -= scale * v[i];
  }
}

std::vector<double> tridiagonal_eigenvalues(std::span<const double> diagonal,
                                            std::span<const double> off_diagonal) {
  std::vector<double> d(diagonal.begin(), diagonal.end());
  std::vector<double> e(d.size(), 0.0);
  std::copy(off_diagonal.begin(), off_diagonal.end(), e.begin());
  ql_implicit(d, e, nullptr);
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<double> tridiagonal_eigenvector(std::span<const double> diagonal,
                                            std::span<const double> off_diagonal, double lambda) {
  const int n = static_cast<int>(diagonal.size());
  if (n == 1) return {1.0};

  double scale = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = std::abs(diagonal[i]);
    if (i > 0) row += std::abs(off_diagonal[i - 1]);
    if (i + 1 < n) row += std::abs(off_diagonal[i]);
    scale = std::max(scale, row);
  }
  const double tiny = std::max(scale, 1.0) * kEps;

  // LU with partial pivoting of T - lambda I; U has two superdiagonals.
  std::vector<double> u0(n), u1(n, 0.0), u2(n, 0.0), mult(n, 0.0);
  std::vector<char> swapped(n, 0);
  double cur0 = diagonal[0] - lambda;
  double cur1 = off_diagonal[0];
  double cur2 = 0.0;
  for (int i = 0; i + 1 < n; ++i) {
    const double sub = off_diagonal[i];
    const double next_diag = diagonal[i + 1] - lambda;
    const double next_super = i + 2 < n ? off_diagonal[i + 1] : 0.0;
    if (std::abs(cur0) >= std::abs(sub)) {
      if (cur0 == 0.0) cur0 = tiny;
      const double m = sub / cur0;
      u0[i] = cur0;
      u1[i] = cur1;
      u2[i] = cur2;
      mult[i] = m;
      cur0 = next_diag - m * cur1;
      cur1 = next_super - m * cur2;
    } else {
      const double m = cur0 / sub;
      u0[i] = sub;
      u1[i] = next_diag;
      u2[i] = next_super;
      mult[i] = m;
      swapped[i] = 1;
      const double new0 = cur1 - m * next_diag;
      const double new1 = cur2 - m * next_super;
      cur0 = new0;
      cur1 = new1;
    }
    cur2 = 0.0;
  }
  u0[n - 1] = std::abs(cur0) < tiny ? std::copysign(tiny, cur0 == 0.0 ? 1.0 : cur0) : cur0;
  for (int i = 0; i + 1 < n; ++i) {
    if (std::abs(u0[i]) < tiny) u0[i] = std::copysign(tiny, u0[i] == 0.0 ? 1.0 : u0[i]);
  }

  auto solve = [&](std::vector<double>& b) {
    for (int i = 0; i + 1 < n; ++i) {
      if (swapped[i]) std::swap(b[i], b[i + 1]);
      b[i + 1] -= mult[i] * b[i];
    }
    for (int i = n - 1; i >= 0; --i) {
      double s = b[i];
      if (i + 1 < n) s -= u1[i] * b[i + 1];
      if (i + 2 < n) s -= u2[i] * b[i + 2];
      b[i] = s / u0[i];
    }
  };

  CounterRng rng(0x1f2e3d4c5b6a7988ULL, static_cast<std::uint64_t>(n));
  std::vector<double> x(n);
  for (auto& xi : x) xi = rng.uniform() - 0.5;
  auto normalize = [&] {
    const double nrm = norm2(x);
    for (auto& xi : x) xi /= nrm;
  };
  normalize();

  auto residual = [&] {
    double r2 = 0.0;
    for (int i = 0; i < n; ++i) {
      double t = (diagonal[i] - lambda) * x[i];
      if (i > 0) t += off_diagonal[i - 1] * x[i - 1];
      if (i + 1 < n) t += off_diagonal[i] * x[i + 1];
      r2 += t * t;
    }
    return std::sqrt(r2);
  };

  for (int iter = 0; iter < 8; ++iter) {
    solve(x);
    normalize();
    if (iter >= 1 && residual() <= 8.0 * n * kEps * std::max(scale, 1.0)) break;
  }
  return x;
}

SymmetricEigen symmetric_eigen(const DenseMatrix& a) {
  const int n = a.rows();
  SymmetricEigen out;
  if (n == 0) return out;
  const auto tri = tridiagonalize(a);
  std::vector<double> d = tri.diagonal;
  std::vector<double> e(n, 0.0);
  std::copy(tri.off_diagonal.begin(), tri.off_diagonal.end(), e.begin());
  DenseMatrix z(n, n);
  for (int i = 0; i < n; ++i) z(i, i) = 1.0;
  ql_implicit(d, e, &z);

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int x, int y) { return d[x] < d[y]; });

  out.values.resize(n);
  out.vectors = DenseMatrix(n, n);
  std::vector<double> col(n);
  for (int j = 0; j < n; ++j) {
    out.values[j] = d[perm[j]];
    for (int i = 0; i < n; ++i) col[i] = z(i, perm[j]);
    tri.apply_q(col);
    for (int i = 0; i < n; ++i) out.vectors(i, j) = col[i];
  }
  return out;
}

}  // namespace fiedler
