#include "eccwheel/closedform.hpp"

#include <cmath>

#include "eccwheel/errors.hpp"

namespace eccwheel::closedform {

using circulant::CirculantQ;

namespace {

std::string n_str(int n) { return std::to_string(n); }

void require_wheel(int n, const char* what) {
  if (n < 5) throw DomainError(std::string(what) + ": requires n >= 5, got n = " + n_str(n));
}

void require_residue(int n, int residue, int min_n, const char* what, const char* reason) {
  if (n < min_n || n % 3 != residue) {
    throw DomainError(std::string(what) + ": requires n = " + std::to_string(residue) +
                      " mod 3 and n >= " + std::to_string(min_n) + " (" + reason +
                      "), got n = " + n_str(n));
  }
}

void require_invertible(int n, const char* what) {
  require_wheel(n, what);
  if (n % 3 == 1) {
    throw DomainError(std::string(what) + ": E(W_" + n_str(n) +
                      ") is singular because n = 1 mod 3");
  }
}

Rational pow2(long e) { return pow(Rational(2), static_cast<unsigned>(e)); }

MatrixQ bordered(const MatrixQ& rim) {
  const std::size_t m = rim.rows();
  return block_compose(MatrixQ::zeros(1, 1), MatrixQ::ones(1, m), MatrixQ::ones(m, 1), rim);
}

// Elements p + q t of Q(t) with t^2 = d.
struct QuadraticElem {
  mpq_class p;
  mpq_class q;
};

QuadraticElem mul(const QuadraticElem& x, const QuadraticElem& y, const mpq_class& d) {
  return {x.p * y.p + x.q * y.q * d, x.p * y.q + x.q * y.p};
}

MatrixQ laplacian_from(int n, const CirculantQ& lower) {
  const auto order = static_cast<std::size_t>(n);
  const std::size_t m = order - 1;
  const MatrixQ star = bordered(MatrixQ::zeros(m, m));
  const MatrixQ lower_block = block_diag(MatrixQ::zeros(1, 1), circulant::to_dense(lower));
  return Rational(n - 1, 3) * identity(order) - Rational(1, 3) * star + lower_block;
}

MatrixQ inverse_shape(int n, const MatrixQ& laplacian) {
  const VectorQ w = weight_w(n);
  return Rational(-1, 2) * laplacian + Rational(6, n - 1) * outer(w, w);
}

}  // namespace

std::vector<double> SpectralRadiusResult::perron_vector() const {
  std::vector<double> v(perron_ones + 1, 1.0);
  v[0] = static_cast<double>(perron_head) / rho_float;
  return v;
}

MatrixQ distance_matrix_wheel(int n) {
  if (n < 4) throw DomainError("distance_matrix_wheel: requires n >= 4, got n = " + n_str(n));
  return bordered(circulant::to_dense(CirculantQ(circulant::distance_rim_row(n))));
}

MatrixQ ecc_matrix_wheel(int n) {
  if (n == 4) return distance_matrix_wheel(4);
  if (n < 4) throw DomainError("ecc_matrix_wheel: requires n >= 4, got n = " + n_str(n));
  return bordered(circulant::to_dense(CirculantQ(circulant::ecc_rim_row(n))));
}

MatrixQ ecc_matrix_wheel_minus_edge(int n) {
  require_wheel(n, "ecc_matrix_wheel_minus_edge");
  const auto m = static_cast<std::size_t>(n - 1);
  const MatrixQ rim = Rational(2) * MatrixQ::ones(m, m) -
                      circulant::tridiagonal({m, Rational(2), Rational(2), Rational(2)});
  return bordered(rim);
}

MatrixQ bordered_B(int n) {
  if (n < 2) throw DomainError("bordered_B: requires n >= 2, got n = " + n_str(n));
  const auto m = static_cast<std::size_t>(n - 1);
  return bordered(circulant::tridiagonal({m, Rational(-2), Rational(-2), Rational(-2)}));
}

TridiagDet det_tridiagonal_closed(std::size_t order, const Rational& a, const Rational& b,
                                  const Rational& c) {
  if (order == 0) throw DimensionError("det_tridiagonal_closed: order must be >= 1");
  const mpq_class disc = a.raw() * a.raw() - 4 * b.raw() * c.raw();
  if (sgn(disc) == 0) {
    mpq_class prev = 1;
    mpq_class cur = a.raw();
    const mpq_class bc = b.raw() * c.raw();
    for (std::size_t k = 2; k <= order; ++k) {
      mpq_class next = a.raw() * cur - bc * prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return {Rational(cur.get_num(), cur.get_den()), false};
  }
  QuadraticElem result{1, 0};
  QuadraticElem base{a.raw() / 2, mpq_class(1, 2)};
  for (std::size_t e = order + 1; e > 0; e >>= 1) {
    if (e & 1U) result = mul(result, base, disc);
    base = mul(base, base, disc);
  }
  const mpq_class value = 2 * result.q;
  return {Rational(value.get_num(), value.get_den()), true};
}

Rational det_T_closed(std::size_t order) {
  if (order == 0) throw DimensionError("det_T_closed: order must be >= 1");
  switch (order % 3) {
    case 0: return pow2(static_cast<long>(order));
    case 1: return -pow2(static_cast<long>(order));
    default: return 0;
  }
}

Rational det_B_closed(int n) {
  if (n < 2) throw DomainError("det_B_closed: requires n >= 2, got n = " + n_str(n));
  switch (n % 3) {
    case 0: return 0;
    case 1: return pow2(n - 2) * Rational(n - 1, 3);
    default: return -pow2(n - 2) * Rational(n + 1, 3);
  }
}

Rational det_E_closed(int n) {
  require_wheel(n, "det_E_closed");
  if (n % 3 == 1) return 0;
  return pow2(n - 2) * Rational(1 - n);
}

Rational det_E_minus_edge_closed(int n) {
  require_wheel(n, "det_E_minus_edge_closed");
  return det_B_closed(n);
}

InertiaTriple inertia_E_minus_edge_closed(int n) {
  require_wheel(n, "inertia_E_minus_edge_closed");
  const long k = n;
  switch (n % 3) {
    case 0: return {k / 3, (2 * k - 3) / 3, 1};
    case 1: return {(k + 2) / 3, (2 * k - 2) / 3, 0};
    default: return {(k + 1) / 3, (2 * k - 1) / 3, 0};
  }
}

InertiaTriple inertia_E_closed(int n) {
  require_wheel(n, "inertia_E_closed");
  const long k = n;
  switch (n % 3) {
    case 0: return {(k + 3) / 3, (2 * k - 3) / 3, 0};
    case 1: return {(k - 1) / 3, (2 * k - 5) / 3, 2};
    default: return {(k + 1) / 3, (2 * k - 1) / 3, 0};
  }
}

long rank_E_closed(int n) {
  require_wheel(n, "rank_E_closed");
  return n % 3 == 1 ? n - 2 : n;
}

std::pair<VectorQ, VectorQ> null_vectors(int n) {
  require_residue(n, 1, 7, "null_vectors", "E(W_n) is invertible otherwise");
  const auto len = static_cast<std::size_t>(n);
  const auto pattern = [&](Rational p0, Rational p1, Rational p2) {
    return VectorQ::generate(len, [&](std::size_t i) {
      if (i == 0) return Rational(0);
      switch ((i - 1) % 3) {
        case 0: return p0;
        case 1: return p1;
        default: return p2;
      }
    });
  };
  return {pattern(1, 0, -1), pattern(0, 1, -1)};
}

VectorQ weight_w(int n) {
  require_wheel(n, "weight_w");
  return VectorQ::generate(static_cast<std::size_t>(n), [&](std::size_t i) {
    return i == 0 ? Rational(7 - n, 6) : Rational(1, 6);
  });
}

CirculantQ circulant_M(int n) {
  require_invertible(n, "circulant_M");
  const VectorQ v = n % 3 == 2 ? circulant::special_x(n) : circulant::special_y(n);
  return Rational(1, 3) * CirculantQ(v);
}

CirculantQ circulant_P(int n) {
  require_residue(n, 1, 7, "circulant_P", "E(W_n) is singular exactly in this class");
  return Rational(1, 3 * (n - 1)) * CirculantQ(circulant::special_z(n));
}

MatrixQ laplacian_tilde(int n) {
  require_invertible(n, "laplacian_tilde");
  return laplacian_from(n, circulant_M(n));
}

MatrixQ laplacian_hat(int n) {
  require_residue(n, 1, 7, "laplacian_hat", "E(W_n) is singular exactly in this class");
  return laplacian_from(n, circulant_P(n));
}

MatrixQ inverse_E_closed(int n) {
  require_invertible(n, "inverse_E_closed");
  return inverse_shape(n, laplacian_tilde(n));
}

MatrixQ pinv_E_closed(int n) {
  require_residue(n, 1, 7, "pinv_E_closed", "otherwise E(W_n) is invertible");
  return inverse_shape(n, laplacian_hat(n));
}

CirculantQ m_times_rim_target(int n) {
  require_invertible(n, "m_times_rim_target");
  const auto m = static_cast<std::size_t>(n - 1);
  return Rational(1, 3) * CirculantQ(VectorQ::generate(m, [&](std::size_t i) {
           if (i == 0) return Rational(-4);
           if (i == 1 || i + 1 == m) return Rational(2);
           return Rational(4 - 2 * n);
         }));
}

CirculantQ p_times_u_target(int n) {
  require_residue(n, 1, 7, "p_times_u_target", "defined with the pseudoinverse circulant");
  const auto m = static_cast<std::size_t>(n - 1);
  const long k = n;
  return Rational(1, 3 * (n - 1)) * CirculantQ(VectorQ::generate(m, [&](std::size_t i) {
           if (i == 0) return Rational(5 * k - k * k - 10);
           if (i == 1 || i + 1 == m) return Rational(2 * k - k * k + 2);
           switch ((i - 2) % 3) {
             case 0: return Rational(3);
             case 1: return Rational(-6);
             default: return Rational(3);
           }
         }));
}

MatrixQ laplacian_hat_times_E_target(int n) {
  require_residue(n, 1, 7, "laplacian_hat_times_E_target", "defined with the pseudoinverse circulant");
  const auto m = static_cast<std::size_t>(n - 1);
  const VectorQ v = VectorQ::generate(m, [&](std::size_t i) {
    if (i == 0) return Rational(17 - 5 * n, n - 1);
    if (i + 2 >= m) return Rational(n - 7, n - 1);
    return (i - 1) % 3 == 2 ? Rational(n + 11, n - 1) : Rational(n - 7, n - 1);
  });
  const MatrixQ full =
      block_compose(MatrixQ::diagonal(VectorQ{Rational(1 - n)}),
                    Rational(7 - n) * MatrixQ::ones(1, m), MatrixQ::ones(m, 1),
                    circulant::to_dense(CirculantQ(v)));
  return Rational(1, 3) * full;
}

MatrixQ pinv_times_E_target(int n) {
  require_residue(n, 1, 7, "pinv_times_E_target", "defined with the pseudoinverse");
  const auto m = static_cast<std::size_t>(n - 1);
  const MatrixQ v = circulant::to_dense(CirculantQ(circulant::period3_v(m)));
  return identity(static_cast<std::size_t>(n)) -
         Rational(1, n - 1) * block_diag(MatrixQ::zeros(1, 1), v);
}

MatrixQ quotient_matrix(int n) {
  require_wheel(n, "quotient_matrix");
  return MatrixQ::from_rows({{0, n - 1}, {1, 2 * (n - 4)}});
}

SpectralRadiusResult spectral_radius_closed(int n) {
  require_wheel(n, "spectral_radius_closed");
  const long k = n;
  const long radicand = k * k - 7 * k + 15;
  const double rho = static_cast<double>(k - 4) + std::sqrt(static_cast<double>(radicand));
  return {k - 4, radicand, rho, k - 1, static_cast<std::size_t>(n - 1)};
}

VectorQ edm_witness(int n) {
  require_wheel(n, "edm_witness");
  const auto len = static_cast<std::size_t>(n);
  if (n % 2 == 1) {
    return VectorQ::generate(len, [](std::size_t i) {
      if (i == 0) return Rational(0);
      return i % 2 == 1 ? Rational(1) : Rational(-1);
    });
  }
  const std::size_t half = len / 2;
  // Zeros at 1-based positions 1 and m+1; each run after a zero alternates.
  const bool second_run_negated = half % 2 == 0;
  return VectorQ::generate(len, [&](std::size_t i) {
    if (i == 0 || i == half) return Rational(0);
    const bool first_run = i < half;
    const std::size_t offset = first_run ? i - 1 : i - half - 1;
    Rational v = offset % 2 == 0 ? Rational(1) : Rational(-1);
    return (!first_run && second_run_negated) ? -v : v;
  });
}

Rational edm_witness_value(int n) {
  require_wheel(n, "edm_witness_value");
  return n % 2 == 1 ? Rational(2 * (n - 1)) : Rational(2 * (n - 4));
}

}  // namespace eccwheel::closedform
