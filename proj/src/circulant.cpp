#include "eccwheel/circulant.hpp"

#include <string>
#include <vector>

#include "eccwheel/errors.hpp"

namespace eccwheel::circulant {

namespace {

void require_order(const CirculantQ& a, const CirculantQ& b, const char* what) {
  if (a.order() != b.order()) {
    throw DimensionError(std::string(what) + ": circulant orders differ");
  }
}

std::size_t rim_length(int n) { return static_cast<std::size_t>(n - 1); }

// Adds coeff * v into acc.
void axpy(std::vector<Rational>& acc, const Rational& coeff, const VectorQ& v) {
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (!v[i].is_zero()) acc[i] = acc[i] + coeff * v[i];
  }
}

void add_unit(std::vector<Rational>& acc, const Rational& coeff, std::size_t pos1) {
  acc.at(pos1 - 1) = acc.at(pos1 - 1) + coeff;
}

VectorQ repeat_pattern(const Rational& head, std::initializer_list<Rational> block,
                       std::size_t repeats, std::initializer_list<Rational> tail) {
  std::vector<Rational> out{head};
  for (std::size_t r = 0; r < repeats; ++r) out.insert(out.end(), block);
  out.insert(out.end(), tail);
  return VectorQ(std::move(out));
}

void check_summation(const VectorQ& closed, const VectorQ& summed, const char* what) {
  if (!(closed == summed)) {
    throw std::logic_error(std::string(what) +
                           ": summation form disagrees with the closed pattern");
  }
}

}  // namespace

CirculantQ::CirculantQ(VectorQ first_row) : first_row_(std::move(first_row)) {}

const Rational& CirculantQ::entry(std::size_t i, std::size_t j) const {
  const std::size_t m = order();
  if (i >= m || j >= m) throw std::out_of_range("CirculantQ::entry");
  return first_row_[(j + m - i) % m];
}

VectorQ CirculantQ::first_column() const {
  return VectorQ::generate(order(), [&](std::size_t i) { return entry(i, 0); });
}

VectorQ shift_T(const VectorQ& v, std::size_t k) {
  const std::size_t m = v.size();
  const std::size_t s = k % m;
  return VectorQ::generate(m, [&](std::size_t i) { return v[(i + m - s) % m]; });
}

MatrixQ to_dense(const CirculantQ& c) {
  return MatrixQ::generate(c.order(), c.order(),
                           [&](std::size_t i, std::size_t j) { return c.entry(i, j); });
}

CirculantQ circ_mul(const CirculantQ& x, const CirculantQ& y) {
  require_order(x, y, "circ_mul");
  const std::size_t m = x.order();
  const VectorQ& xr = x.first_row();
  std::vector<mpq_class> acc(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (xr[i].is_zero()) continue;
    for (std::size_t j = 0; j < m; ++j) {
      const Rational& yij = y.entry(i, j);
      if (!yij.is_zero()) acc[j] += xr[i].raw() * yij.raw();
    }
  }
  return CirculantQ(VectorQ::generate(m, [&](std::size_t j) {
    return Rational(acc[j].get_num(), acc[j].get_den());
  }));
}

CirculantQ operator+(const CirculantQ& a, const CirculantQ& b) {
  require_order(a, b, "circulant +");
  return CirculantQ(a.first_row() + b.first_row());
}

CirculantQ operator-(const CirculantQ& a, const CirculantQ& b) {
  require_order(a, b, "circulant -");
  return CirculantQ(a.first_row() - b.first_row());
}

CirculantQ operator*(const Rational& s, const CirculantQ& c) {
  return CirculantQ(s * c.first_row());
}

Period3Product period3_row_product(const VectorQ& g, const CirculantQ& c) {
  const std::size_t m = c.order();
  if (m % 3 != 0) throw DimensionError("period3_row_product: order must be divisible by 3");
  if (g.size() != m) throw DimensionError("period3_row_product: length mismatch");
  for (std::size_t i = 3; i < m; ++i) {
    if (!(g[i] == g[i - 3])) {
      throw std::invalid_argument("period3_row_product: g is not 3-periodic");
    }
  }
  const VectorQ col = c.first_column();
  return Period3Product{dot(g, col), dot(shift_T(g, 2), col), dot(shift_T(g, 1), col)};
}

bool is_symmetric_in_last_coords(const VectorQ& x) {
  const std::size_t m = x.size();
  if (m < 3) throw DimensionError("is_symmetric_in_last_coords: length must be >= 3");
  for (std::size_t i = 1; i < m; ++i) {
    if (!(x[i] == x[m - i])) return false;
  }
  return true;
}

VectorQ basis_c(int k, int n) {
  if (n < 4) throw DomainError("basis_c: n must be >= 4");
  const int kmax = n % 2 == 0 ? (n - 2) / 2 : (n - 3) / 2;
  if (k < 1 || k > kmax) {
    throw DomainError("basis_c: k = " + std::to_string(k) + " outside 1.." +
                      std::to_string(kmax) + " for n = " + std::to_string(n));
  }
  std::vector<Rational> out(rim_length(n));
  out[static_cast<std::size_t>(k)] = 1;
  out[static_cast<std::size_t>(n - k - 1)] = 1;
  return VectorQ(std::move(out));
}

VectorQ special_x(int n) {
  if (n < 5 || n % 3 != 2) {
    throw DomainError("special_x: requires n = 2 mod 3 and n >= 5, got n = " +
                      std::to_string(n));
  }
  const VectorQ closed = repeat_pattern(2 - n, {1, -2, 1}, static_cast<std::size_t>(n - 2) / 3, {});

  std::vector<Rational> sum(rim_length(n));
  sum[0] = 2 - n;
  if (n % 2 == 0) {
    for (int k = 1; k <= (n - 2) / 6; ++k) {
      axpy(sum, 1, basis_c(3 * k - 2, n));
      axpy(sum, -2, basis_c(3 * k - 1, n));
      axpy(sum, 1, basis_c(3 * k, n));
    }
  } else {
    for (int k = 1; k <= (n - 5) / 6; ++k) {
      axpy(sum, 1, basis_c(3 * k, n));
      axpy(sum, -2, basis_c(3 * k - 1, n));
    }
    for (int k = 1; k <= (n + 1) / 6; ++k) axpy(sum, 1, basis_c(3 * k - 2, n));
    add_unit(sum, -2, static_cast<std::size_t>((n + 1) / 2));
  }
  check_summation(closed, VectorQ(std::move(sum)), "special_x");
  return closed;
}

VectorQ special_y(int n) {
  if (n < 6 || n % 3 != 0) {
    throw DomainError("special_y: requires n = 0 mod 3 and n >= 6, got n = " +
                      std::to_string(n));
  }
  const VectorQ closed =
      repeat_pattern(-n, {2, -1, -1}, static_cast<std::size_t>(n - 3) / 3, {2});

  std::vector<Rational> sum(rim_length(n));
  sum[0] = -n;
  if (n % 2 == 0) {
    for (int k = 1; k <= n / 6; ++k) {
      axpy(sum, 2, basis_c(3 * k - 2, n));
      axpy(sum, -1, basis_c(3 * k - 1, n));
    }
    for (int k = 1; k <= n / 6 - 1; ++k) axpy(sum, -1, basis_c(3 * k, n));
  } else {
    for (int k = 1; k <= (n - 3) / 6; ++k) {
      axpy(sum, 2, basis_c(3 * k - 2, n));
      axpy(sum, -1, basis_c(3 * k - 1, n));
      axpy(sum, -1, basis_c(3 * k, n));
    }
    add_unit(sum, 2, static_cast<std::size_t>((n + 1) / 2));
  }
  check_summation(closed, VectorQ(std::move(sum)), "special_y");
  return closed;
}

VectorQ special_z(int n) {
  if (n < 7 || n % 3 != 1) {
    throw DomainError("special_z: requires n = 1 mod 3 and n >= 7, got n = " +
                      std::to_string(n));
  }
  const long nl = n;
  std::vector<Rational> sum(rim_length(n));
  sum[0] = 2 * nl - nl * nl;
  const auto pair_terms = [&](int k) {
    axpy(sum, Rational(3 * nl - 18 * k + 8, 2), basis_c(3 * k - 2, n));
    axpy(sum, Rational(-(3 * nl - 18 * k + 4), 2), basis_c(3 * k - 1, n));
  };
  if (n % 2 == 0) {
    for (int k = 1; k <= (n - 4) / 6; ++k) {
      pair_terms(k);
      axpy(sum, 1, basis_c(3 * k, n));
    }
    axpy(sum, 1, basis_c(n / 2 - 1, n));
  } else {
    for (int k = 1; k <= (n - 1) / 6; ++k) pair_terms(k);
    for (int k = 1; k <= (n - 7) / 6; ++k) axpy(sum, 1, basis_c(3 * k, n));
    add_unit(sum, 1, static_cast<std::size_t>((n + 1) / 2));
  }
  VectorQ z(std::move(sum));
  if (!is_symmetric_in_last_coords(z)) {
    throw std::logic_error("special_z: summation form is not symmetric");
  }
  return z;
}

MatrixQ tridiagonal(const TridiagSpec& spec) {
  if (spec.order == 0) throw DimensionError("tridiagonal: order must be >= 1");
  return MatrixQ::generate(spec.order, spec.order, [&](std::size_t i, std::size_t j) {
    if (i == j) return spec.a;
    if (j == i + 1) return spec.b;
    if (i == j + 1) return spec.c;
    return Rational(0);
  });
}

VectorQ ecc_rim_row(int n) {
  if (n < 5) throw DomainError("ecc_rim_row: requires n >= 5");
  const std::size_t m = rim_length(n);
  return VectorQ::generate(m, [&](std::size_t i) {
    return (i >= 2 && i + 1 < m) ? Rational(2) : Rational(0);
  });
}

VectorQ distance_rim_row(int n) {
  if (n < 4) throw DomainError("distance_rim_row: requires n >= 4");
  const std::size_t m = rim_length(n);
  return VectorQ::generate(m, [&](std::size_t i) {
    if (i == 0) return Rational(0);
    if (i == 1 || i + 1 == m) return Rational(1);
    return Rational(2);
  });
}

VectorQ period3_v(std::size_t m) {
  if (m == 0 || m % 3 != 0) throw DimensionError("period3_v: length must be a positive multiple of 3");
  return VectorQ::generate(m, [](std::size_t i) { return i % 3 == 0 ? Rational(2) : Rational(-1); });
}

VectorQ neighbor_row(std::size_t m) {
  if (m < 3) throw DimensionError("neighbor_row: length must be >= 3");
  return VectorQ::generate(m, [&](std::size_t i) {
    return (i <= 1 || i + 1 == m) ? Rational(1) : Rational(0);
  });
}

}  // namespace eccwheel::circulant
