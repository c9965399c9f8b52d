#include "eccwheel/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <string>

#include "eccwheel/closedform.hpp"
#include "eccwheel/errors.hpp"
#include "eccwheel/graphs.hpp"

namespace eccwheel::oracle {

namespace {

using Grid = std::vector<std::vector<mpq_class>>;

Grid to_grid(const MatrixQ& m) {
  Grid g(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) g[i][j] = m(i, j).raw();
  }
  return g;
}

Rational from_mpq(const mpq_class& q) { return Rational(q.get_num(), q.get_den()); }

void require_square(const MatrixQ& m, const char* what) {
  if (!m.is_square()) throw DimensionError(std::string(what) + ": matrix must be square");
}

std::vector<bool> reachable(const MatrixQ& m, bool transposed) {
  const std::size_t n = m.rows();
  std::vector<bool> seen(n, false);
  std::queue<std::size_t> frontier;
  seen[0] = true;
  frontier.push(0);
  while (!frontier.empty()) {
    const auto v = frontier.front();
    frontier.pop();
    for (std::size_t u = 0; u < n; ++u) {
      const Rational& a = transposed ? m(u, v) : m(v, u);
      if (u != v && !seen[u] && !a.is_zero()) {
        seen[u] = true;
        frontier.push(u);
      }
    }
  }
  return seen;
}

}  // namespace

Rational bareiss_det(const MatrixQ& m) {
  require_square(m, "bareiss_det");
  const std::size_t n = m.rows();
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  mpz_class scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class row_lcm = 1;
    for (std::size_t j = 0; j < n; ++j) {
      mpz_class den = m(i, j).denominator();
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = m(i, j).numerator() * (row_lcm / m(i, j).denominator());
    }
    scale *= row_lcm;
  }

  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  mpz_class det = a[n - 1][n - 1];
  if (sign < 0) det = -det;
  return Rational(det, scale);
}

std::size_t rank_exact(const MatrixQ& m) {
  Grid a = to_grid(m);
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t p = rank;
    while (p < rows && sgn(a[p][col]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (sgn(a[i][col]) == 0) continue;
      const mpq_class f = a[i][col] / a[rank][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

MatrixQ inverse_exact(const MatrixQ& m) {
  require_square(m, "inverse_exact");
  const std::size_t n = m.rows();
  Grid a = to_grid(m);
  Grid inv(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && sgn(a[p][col]) == 0) ++p;
    if (p == n) throw SingularMatrixError("inverse_exact: matrix is singular");
    std::swap(a[p], a[col]);
    std::swap(inv[p], inv[col]);
    const mpq_class pivot = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= pivot;
      inv[col][j] /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || sgn(a[i][col]) == 0) continue;
      const mpq_class f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return MatrixQ::generate(n, n, [&](std::size_t i, std::size_t j) { return from_mpq(inv[i][j]); });
}

CongruenceReport inertia_exact(const MatrixQ& m) {
  require_square(m, "inertia_exact");
  if (!m.is_symmetric()) throw NotSymmetricError("inertia_exact: matrix must be symmetric");
  Grid a = to_grid(m);
  std::vector<std::size_t> active(m.rows());
  std::iota(active.begin(), active.end(), 0);

  CongruenceReport report;
  auto& tri = report.inertia;
  const auto remove = [&](std::size_t idx) {
    active.erase(std::find(active.begin(), active.end(), idx));
  };

  while (!active.empty()) {
    const auto diag = std::find_if(active.begin(), active.end(),
                                   [&](std::size_t i) { return sgn(a[i][i]) != 0; });
    if (diag != active.end()) {
      const std::size_t i = *diag;
      const mpq_class pivot = a[i][i];
      remove(i);
      for (auto r : active) {
        if (sgn(a[r][i]) == 0) continue;
        const mpq_class f = a[r][i] / pivot;
        for (auto c : active) a[r][c] -= f * a[i][c];
      }
      if (sgn(pivot) > 0) {
        ++tri.n_plus;
        report.pivot_log.push_back(PivotKind::positive);
      } else {
        ++tri.n_minus;
        report.pivot_log.push_back(PivotKind::negative);
      }
      continue;
    }

    std::size_t pi = 0;
    std::size_t pj = 0;
    bool found = false;
    for (std::size_t x = 0; x < active.size() && !found; ++x) {
      for (std::size_t y = x + 1; y < active.size() && !found; ++y) {
        if (sgn(a[active[x]][active[y]]) != 0) {
          pi = active[x];
          pj = active[y];
          found = true;
        }
      }
    }
    if (!found) {
      tri.n_zero += static_cast<long>(active.size());
      report.pivot_log.insert(report.pivot_log.end(), active.size(), PivotKind::zero);
      break;
    }
    // Block [[0, h], [h, 0]] has inertia (1, 1, 0); eliminate its Schur complement.
    const mpq_class h = a[pi][pj];
    remove(pi);
    remove(pj);
    const Grid snapshot = a;
    for (auto r : active) {
      for (auto c : active) {
        const mpq_class t = snapshot[r][pi] * snapshot[pj][c] + snapshot[r][pj] * snapshot[pi][c];
        if (sgn(t) != 0) a[r][c] -= t / h;
      }
    }
    ++tri.n_plus;
    ++tri.n_minus;
    report.pivot_log.push_back(PivotKind::hyperbolic);
  }
  return report;
}

PenroseResult penrose_check(const MatrixQ& a, const MatrixQ& x) {
  if (a.rows() != x.cols() || a.cols() != x.rows()) {
    throw DimensionError("penrose_check: X must have the shape of A transposed");
  }
  const MatrixQ ax = mat_mul(a, x);
  const MatrixQ xa = mat_mul(x, a);
  PenroseResult r;
  r.axa = mat_mul(ax, a) == a;
  r.xax = mat_mul(xa, x) == x;
  r.ax_symmetric = ax.is_symmetric();
  r.xa_symmetric = xa.is_symmetric();
  return r;
}

bool is_irreducible_literal(const MatrixQ& m) {
  require_square(m, "is_irreducible_literal");
  const std::size_t n = m.rows();
  const MatrixQ base = identity(n) + m;
  MatrixQ power = identity(n);
  for (std::size_t k = 1; k < n; ++k) power = mat_mul(power, base);
  return std::all_of(power.entries().begin(), power.entries().end(),
                     [](const Rational& v) { return v.sign() > 0; });
}

bool is_irreducible(const MatrixQ& m, std::size_t literal_limit) {
  require_square(m, "is_irreducible");
  for (const auto& v : m.entries()) {
    if (v.sign() < 0) throw DomainError("is_irreducible: matrix has a negative entry");
  }
  const auto forward = reachable(m, false);
  const auto backward = reachable(m, true);
  const bool strong = std::all_of(forward.begin(), forward.end(), [](bool b) { return b; }) &&
                      std::all_of(backward.begin(), backward.end(), [](bool b) { return b; });
  if (m.rows() <= literal_limit && strong != is_irreducible_literal(m)) {
    throw std::logic_error("is_irreducible: strong connectivity disagrees with (I+A)^(n-1) > 0");
  }
  return strong;
}

double power_iteration_rho(const MatrixQ& m, double tol, std::size_t max_iters) {
  require_square(m, "power_iteration_rho");
  const std::size_t n = m.rows();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    a[i] = m.entries()[i].to_double();
    if (a[i] < 0) throw DomainError("power_iteration_rho: matrix has a negative entry");
  }
  std::vector<double> x(n, 1.0);
  std::vector<double> y(n);
  double estimate = 0.0;
  for (std::size_t it = 0; it < max_iters; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = x[i];
      for (std::size_t j = 0; j < n; ++j) s += a[i * n + j] * x[j];
      y[i] = s;
    }
    const double norm = *std::max_element(y.begin(), y.end());
    if (!(norm > 0.0)) throw DomainError("power_iteration_rho: iterate collapsed to zero");
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
    const double next = norm - 1.0;
    if (it > 0 && std::abs(next - estimate) <= tol * std::abs(next)) return next;
    estimate = next;
  }
  throw NonConvergenceError("power_iteration_rho: no convergence after " +
                                std::to_string(max_iters) + " iterations",
                            estimate, x);
}

RankCertificate rank_certificate_check(int n) {
  if (n < 10 || n % 3 != 1) {
    throw DomainError("rank_certificate_check: requires n = 1 mod 3 and n >= 10, got n = " +
                      std::to_string(n));
  }
  const auto order = static_cast<std::size_t>(n);
  const std::size_t k = order - 4;
  const std::size_t cols = order - 3;

  // s = (-2,0,0, -1,0,0, ...) of length n-4, S = cir(s).
  const auto s_at = [&](std::size_t idx) {
    if (idx == 0) return Rational(-2);
    return idx % 3 == 0 ? Rational(-1) : Rational(0);
  };
  const MatrixQ x = MatrixQ::generate(order, cols, [&](std::size_t i, std::size_t j) {
    if (i == 0) return j == 0 ? Rational(n - 10, 2) : Rational(n - 7, 2);
    if (i <= k) {
      if (j == 0) return Rational(-1, 2);
      return Rational(3, 2) * s_at((j - 1 + k - (i - 1)) % k);
    }
    return Rational(0);
  });
  const MatrixQ c = MatrixQ::generate(order, cols, [&](std::size_t i, std::size_t j) {
    if (i < cols) return i == j ? Rational(3) : Rational(0);
    if (j == 0) return Rational(-1);
    const std::size_t phase = i - cols;  // 0 for p, 1 for q, 2 for r
    return (j - 1) % 3 == phase ? Rational(-3) : Rational(0);
  });

  const MatrixQ e = graphs::eccentricity_matrix_definitional(
      graphs::bfs_distances(graphs::build_wheel(n)));
  const MatrixQ product = mat_mul(mat_mul(closedform::laplacian_hat(n), e), x);
  return RankCertificate{x, c, product == c, rank_exact(c)};
}

}  // namespace eccwheel::oracle
