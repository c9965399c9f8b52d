#pragma once

// Exact rational scalars, vectors and dense matrices.
//
// Every value type here is immutable once built: arithmetic returns a new
// object and nothing exposes a mutable reference to stored entries, so
// values can be shared freely between threads.

#include <gmpxx.h>

#include <concepts>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eccwheel {

class Rational {
 public:
  Rational() = default;
  template <std::signed_integral T>
  Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT
  template <std::unsigned_integral T>
  Rational(T value) : value_(static_cast<unsigned long>(value)) {}  // NOLINT
  Rational(long numerator, long denominator);
  Rational(const mpz_class& numerator, const mpz_class& denominator);
  explicit Rational(const mpz_class& integer);

  // Accepts "p", "-p", "p/q" and "-p/q" with decimal integers.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  double to_double() const { return value_.get_d(); }

  // "p" when the denominator is 1, otherwise "p/q".
  std::string to_string() const;
  // Always "p/q", including "0/1" and "5/1".
  std::string to_fraction_string() const;

  Rational operator-() const;
  Rational reciprocal() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.value_ < b.value_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational pow(const Rational& base, unsigned exponent);

class VectorQ {
 public:
  explicit VectorQ(std::vector<Rational> entries);
  VectorQ(std::initializer_list<Rational> entries);

  static VectorQ generate(std::size_t length,
                          const std::function<Rational(std::size_t)>& fn);
  static VectorQ zeros(std::size_t length);
  static VectorQ ones(std::size_t length);
  // Standard basis vector with a 1 at 0-based position `index`.
  static VectorQ unit(std::size_t length, std::size_t index);

  std::size_t size() const { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  const Rational& at(std::size_t i) const;
  std::span<const Rational> entries() const { return entries_; }

  Rational sum() const;
  bool is_zero() const;

  friend VectorQ operator+(const VectorQ& a, const VectorQ& b);
  friend VectorQ operator-(const VectorQ& a, const VectorQ& b);
  friend VectorQ operator*(const Rational& s, const VectorQ& v);
  VectorQ operator-() const;
  friend bool operator==(const VectorQ& a, const VectorQ& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<Rational> entries_;
};

Rational dot(const VectorQ& a, const VectorQ& b);

class MatrixQ {
 public:
  // Row-major entries; entries.size() must equal rows * cols.
  MatrixQ(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static MatrixQ generate(
      std::size_t rows, std::size_t cols,
      const std::function<Rational(std::size_t, std::size_t)>& fn);
  static MatrixQ from_rows(
      std::initializer_list<std::initializer_list<Rational>> rows);
  static MatrixQ from_rows(const std::vector<std::vector<Rational>>& rows);
  static MatrixQ zeros(std::size_t rows, std::size_t cols);
  static MatrixQ ones(std::size_t rows, std::size_t cols);
  static MatrixQ diagonal(const VectorQ& diag);
  static MatrixQ column(const VectorQ& v);
  static MatrixQ row(const VectorQ& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  const Rational& at(std::size_t i, std::size_t j) const;
  std::span<const Rational> entries() const { return entries_; }

  VectorQ row_vector(std::size_t i) const;
  VectorQ column_vector(std::size_t j) const;

  // Rows [row0, row0+nrows) and columns [col0, col0+ncols).
  MatrixQ block(std::size_t row0, std::size_t col0, std::size_t nrows,
                std::size_t ncols) const;

  MatrixQ transpose() const;
  bool is_symmetric() const;
  bool is_zero() const;
  bool is_identity() const;

  friend MatrixQ operator+(const MatrixQ& a, const MatrixQ& b);
  friend MatrixQ operator-(const MatrixQ& a, const MatrixQ& b);
  friend MatrixQ operator*(const Rational& s, const MatrixQ& m);
  MatrixQ operator-() const;
  friend bool operator==(const MatrixQ& a, const MatrixQ& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> entries_;
};

MatrixQ identity(std::size_t n);
MatrixQ mat_mul(const MatrixQ& a, const MatrixQ& b);
VectorQ mat_vec(const MatrixQ& a, const VectorQ& x);
// Row vector times matrix: x' A.
VectorQ vec_mat(const VectorQ& x, const MatrixQ& a);
MatrixQ outer(const VectorQ& a, const VectorQ& b);

// Assembles [[tl, tr], [bl, br]] where tl is 1x1, tr is 1x(m), bl is (m)x1
// and br is m x m.
MatrixQ block_compose(const MatrixQ& tl, const MatrixQ& tr, const MatrixQ& bl,
                      const MatrixQ& br);

// Inverse of block_compose: splits off the first row and column.
struct BorderedBlocks {
  MatrixQ tl;
  MatrixQ tr;
  MatrixQ bl;
  MatrixQ br;
};
BorderedBlocks split_bordered(const MatrixQ& m);

// Block diagonal [[a, 0], [0, b]].
MatrixQ block_diag(const MatrixQ& a, const MatrixQ& b);

std::ostream& operator<<(std::ostream& os, const VectorQ& v);
std::ostream& operator<<(std::ostream& os, const MatrixQ& m);

}  // namespace eccwheel
