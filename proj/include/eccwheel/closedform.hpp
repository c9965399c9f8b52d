#pragma once

// Closed forms for the eccentricity matrix of the wheel W_n and of W_n - e
// (rim edge v_2 v_n deleted): the matrices themselves, determinants,
// inertias, rank, the inverse and Moore-Penrose inverse, the spectral
// radius and non-EDM witnesses.
//
// Every function taking n rejects n < 5 with DomainError, and functions tied
// to a residue class of n mod 3 reject the others with DomainError.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "eccwheel/circulant.hpp"
#include "eccwheel/inertia.hpp"
#include "eccwheel/ratq.hpp"

namespace eccwheel::closedform {

using eccwheel::InertiaTriple;

// rho = integer_part + sqrt(radicand). The Perron vector is
// (perron_head / rho, 1, ..., 1) with perron_ones trailing ones.
struct SpectralRadiusResult {
  long integer_part;
  long radicand;
  double rho_float;
  long perron_head;
  std::size_t perron_ones;

  std::vector<double> perron_vector() const;
};

// D(W_n) for n >= 4.
MatrixQ distance_matrix_wheel(int n);
// E(W_n) for n >= 5; n = 4 returns D(W_4).
MatrixQ ecc_matrix_wheel(int n);
MatrixQ ecc_matrix_wheel_minus_edge(int n);
// [[0, e'], [e, T_{n-1}(-2,-2,-2)]] for n >= 2.
MatrixQ bordered_B(int n);

struct TridiagDet {
  Rational value;
  // False when a^2 = 4bc and the three-term recurrence was used instead.
  bool closed_form_domain;
};

// det T_m(a,b,c) = (alpha^{m+1} - beta^{m+1}) / (alpha - beta) with alpha,
// beta the roots of x^2 - a x + bc, evaluated exactly in Q(sqrt(a^2-4bc)).
TridiagDet det_tridiagonal_closed(std::size_t order, const Rational& a,
                                  const Rational& b, const Rational& c);

// det T_m(-2,-2,-2) for m >= 1.
Rational det_T_closed(std::size_t order);
// det B_n for n >= 2.
Rational det_B_closed(int n);
Rational det_E_closed(int n);
Rational det_E_minus_edge_closed(int n);

InertiaTriple inertia_E_minus_edge_closed(int n);
InertiaTriple inertia_E_closed(int n);
long rank_E_closed(int n);

// Two independent kernel vectors of E(W_n), n = 1 mod 3.
std::pair<VectorQ, VectorQ> null_vectors(int n);

VectorQ weight_w(int n);

// (1/3) cir(special_x) or (1/3) cir(special_y), for n != 1 mod 3.
circulant::CirculantQ circulant_M(int n);
// cir(special_z) / (3(n-1)), for n = 1 mod 3.
circulant::CirculantQ circulant_P(int n);

MatrixQ laplacian_tilde(int n);
MatrixQ laplacian_hat(int n);
MatrixQ inverse_E_closed(int n);
MatrixQ pinv_E_closed(int n);

// Targets of the circulant identities behind the inverse and pseudoinverse.
// (1/3) cir(-4, 2, 4-2n, ..., 4-2n, 2): the product M * cir(u).
circulant::CirculantQ m_times_rim_target(int n);
// cir(z') / (3(n-1)) with z' = (5n-n^2-10, 2n-n^2+2, 3,-6,3, ..., 2n-n^2+2).
circulant::CirculantQ p_times_u_target(int n);
// (1/3) [[1-n, (7-n) e'], [e, cir(v')]], the product L_hat * E.
MatrixQ laplacian_hat_times_E_target(int n);
// I - (1/(n-1)) blockdiag(0, cir(2,-1,-1,...)), the product pinv * E.
MatrixQ pinv_times_E_target(int n);

MatrixQ quotient_matrix(int n);
SpectralRadiusResult spectral_radius_closed(int n);

// A vector z with e'z = 0 and z'Ez > 0.
VectorQ edm_witness(int n);
// The value z'Ez attained by edm_witness: 2(n-1) for odd n, 2(n-4) for even n.
Rational edm_witness_value(int n);

}  // namespace eccwheel::closedform
