#pragma once

// Brute-force verifiers that share no code with the closed forms. Each one
// works on a dense matrix and knows nothing about wheels, except
// rank_certificate_check which assembles its own certificate.

#include <cstddef>
#include <vector>

#include "eccwheel/inertia.hpp"
#include "eccwheel/ratq.hpp"

namespace eccwheel::oracle {

// Fraction-free elimination on the matrix scaled to integers.
Rational bareiss_det(const MatrixQ& m);

std::size_t rank_exact(const MatrixQ& m);

// Gauss-Jordan; throws SingularMatrixError when m is singular.
MatrixQ inverse_exact(const MatrixQ& m);

enum class PivotKind { positive, negative, hyperbolic, zero };

struct CongruenceReport {
  InertiaTriple inertia;
  std::vector<PivotKind> pivot_log;
};

// Symmetric congruence with 1x1 pivots where the diagonal allows it and
// 2x2 hyperbolic pivots otherwise. Throws NotSymmetricError.
CongruenceReport inertia_exact(const MatrixQ& m);

struct PenroseResult {
  bool axa = false;        // A X A = A
  bool xax = false;        // X A X = X
  bool ax_symmetric = false;
  bool xa_symmetric = false;

  bool all() const { return axa && xax && ax_symmetric && xa_symmetric; }
};

PenroseResult penrose_check(const MatrixQ& a, const MatrixQ& x);

// Strong connectivity of the off-diagonal support. Rejects negative entries.
// For order <= literal_limit the positivity of (I + A)^(order-1) is computed
// as well, and a disagreement throws std::logic_error.
bool is_irreducible(const MatrixQ& m, std::size_t literal_limit = 12);

// (I + A)^(order-1) > 0 entrywise, computed exactly.
bool is_irreducible_literal(const MatrixQ& m);

// Spectral radius of a non-negative irreducible matrix. Iterates on A + I
// from the all-ones vector with max-norm scaling until the relative change
// of the estimate drops below tol. Throws NonConvergenceError.
double power_iteration_rho(const MatrixQ& m, double tol = 1e-12,
                           std::size_t max_iters = 10000);

struct RankCertificate {
  MatrixQ x;
  MatrixQ c;
  bool product_matches = false;
  std::size_t rank_c = 0;

  bool holds(std::size_t n) const { return product_matches && rank_c + 3 == n; }
};

// Builds X and C for n = 1 mod 3, n >= 10, and compares L_hat E X with C,
// where E comes from breadth-first distances of the wheel.
RankCertificate rank_certificate_check(int n);

}  // namespace eccwheel::oracle
