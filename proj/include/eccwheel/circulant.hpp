#pragma once

// Circulant matrices stored by their first row, tridiagonal builders, and
// the special defining vectors that feed the inverse and pseudoinverse
// constructions.
//
// Vector positions in the comments below are 1-based to match the usual
// notation; the C++ API is 0-based.

#include <cstddef>

#include "eccwheel/ratq.hpp"

namespace eccwheel::circulant {

// cir(c): row i (0-based) is c shifted right i times, so entry (i,j) is
// c[(j - i) mod m].
class CirculantQ {
 public:
  explicit CirculantQ(VectorQ first_row);

  std::size_t order() const { return first_row_.size(); }
  const VectorQ& first_row() const { return first_row_; }
  const Rational& entry(std::size_t i, std::size_t j) const;
  // First column, i.e. entry(i, 0) for every i.
  VectorQ first_column() const;

  friend bool operator==(const CirculantQ&, const CirculantQ&) = default;

 private:
  VectorQ first_row_;
};

// Right cyclic shift applied k times: (f1..fm) -> (fm, f1, .., f(m-1)).
VectorQ shift_T(const VectorQ& v, std::size_t k);

MatrixQ to_dense(const CirculantQ& c);

// Product of two circulants of equal order, formed as cir(x' Y) from the
// first row of x and the columns of y.
CirculantQ circ_mul(const CirculantQ& x, const CirculantQ& y);

CirculantQ operator+(const CirculantQ& a, const CirculantQ& b);
CirculantQ operator-(const CirculantQ& a, const CirculantQ& b);
CirculantQ operator*(const Rational& s, const CirculantQ& c);

struct Period3Product {
  Rational tau1;
  Rational tau2;
  Rational tau3;
};

// For g with period-3 pattern and c of order divisible by 3, returns
// (tau1, tau2, tau3) with g'C = (tau1, tau2, tau3, tau1, tau2, tau3, ...),
// using only the first column of C.
Period3Product period3_row_product(const VectorQ& g, const CirculantQ& c);

// True iff x_i = x_{m+2-i} for i = 2..m, where m = length.
bool is_symmetric_in_last_coords(const VectorQ& x);

// Length n-1 vector with ones at positions k+1 and n-k.
VectorQ basis_c(int k, int n);

// (2-n, 1,-2,1, ..., 1,-2,1) for n = 2 mod 3, n >= 5.
VectorQ special_x(int n);
// (-n, 2,-1,-1, ..., 2,-1,-1, 2) for n = 0 mod 3, n >= 6.
VectorQ special_y(int n);
// Defining vector of the pseudoinverse circulant for n = 1 mod 3, n >= 7.
VectorQ special_z(int n);

struct TridiagSpec {
  std::size_t order;
  Rational a;  // diagonal
  Rational b;  // superdiagonal
  Rational c;  // subdiagonal
};

MatrixQ tridiagonal(const TridiagSpec& spec);

// (0, 0, 2, ..., 2, 0) of length n-1: first row of the rim block of E(W_n).
VectorQ ecc_rim_row(int n);
// (0, 1, 2, ..., 2, 1) of length n-1: first row of the rim block of D(W_n).
VectorQ distance_rim_row(int n);
// (2,-1,-1, 2,-1,-1, ...) of length m, m divisible by 3.
VectorQ period3_v(std::size_t m);
// (1, 1, 0, ..., 0, 1) of length m >= 3.
VectorQ neighbor_row(std::size_t m);

}  // namespace eccwheel::circulant
