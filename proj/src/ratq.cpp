#include "eccwheel/ratq.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "eccwheel/errors.hpp"

namespace eccwheel {

// ---------------------------------------------------------------- Rational

Rational::Rational(long numerator, long denominator)
    : Rational(mpz_class(numerator), mpz_class(denominator)) {}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) {
    throw std::domain_error("Rational: zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(const mpz_class& integer) : value_(integer) {}

namespace {

bool is_decimal_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
  if (start == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

mpz_class parse_integer(std::string_view s) {
  std::string text(s);
  if (!text.empty() && text.front() == '+') text.erase(0, 1);
  return mpz_class(text, 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_decimal_integer(num)) {
    throw std::invalid_argument("Rational::parse: bad numerator in '" +
                                std::string(text) + "'");
  }
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(num));
  }
  std::string_view den = text.substr(slash + 1);
  if (!is_decimal_integer(den) || den.front() == '-') {
    throw std::invalid_argument("Rational::parse: bad denominator in '" +
                                std::string(text) + "'");
  }
  return Rational(parse_integer(num), parse_integer(den));
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_fraction_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
  return Rational(mpq_class(1 / value_));
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(mpq_class(a.value_ + b.value_));
}
Rational operator-(const Rational& a, const Rational& b) {
  return Rational(mpq_class(a.value_ - b.value_));
}
Rational operator*(const Rational& a, const Rational& b) {
  return Rational(mpq_class(a.value_ * b.value_));
}
Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(mpq_class(a.value_ / b.value_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1U) result = result * b;
    b = b * b;
    exponent >>= 1U;
  }
  return result;
}

// ----------------------------------------------------------------- VectorQ

VectorQ::VectorQ(std::vector<Rational> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DimensionError("VectorQ: length must be >= 1");
}

VectorQ::VectorQ(std::initializer_list<Rational> entries)
    : VectorQ(std::vector<Rational>(entries)) {}

VectorQ VectorQ::generate(std::size_t length,
                          const std::function<Rational(std::size_t)>& fn) {
  std::vector<Rational> out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) out.push_back(fn(i));
  return VectorQ(std::move(out));
}

VectorQ VectorQ::zeros(std::size_t length) {
  return VectorQ(std::vector<Rational>(length, Rational(0)));
}

VectorQ VectorQ::ones(std::size_t length) {
  return VectorQ(std::vector<Rational>(length, Rational(1)));
}

VectorQ VectorQ::unit(std::size_t length, std::size_t index) {
  if (index >= length) throw DimensionError("VectorQ::unit: index out of range");
  std::vector<Rational> out(length, Rational(0));
  out[index] = Rational(1);
  return VectorQ(std::move(out));
}

const Rational& VectorQ::at(std::size_t i) const {
  if (i >= entries_.size()) throw DimensionError("VectorQ: index out of range");
  return entries_[i];
}

Rational VectorQ::sum() const {
  Rational s;
  for (const auto& x : entries_) s = s + x;
  return s;
}

bool VectorQ::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& x) { return x.is_zero(); });
}

namespace {
void require_same_length(const VectorQ& a, const VectorQ& b, const char* op) {
  if (a.size() != b.size()) {
    throw DimensionError(std::string("VectorQ ") + op + ": length mismatch (" +
                         std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()) + ")");
  }
}
}  // namespace

VectorQ operator+(const VectorQ& a, const VectorQ& b) {
  require_same_length(a, b, "+");
  return VectorQ::generate(a.size(), [&](std::size_t i) { return a[i] + b[i]; });
}

VectorQ operator-(const VectorQ& a, const VectorQ& b) {
  require_same_length(a, b, "-");
  return VectorQ::generate(a.size(), [&](std::size_t i) { return a[i] - b[i]; });
}

VectorQ operator*(const Rational& s, const VectorQ& v) {
  return VectorQ::generate(v.size(), [&](std::size_t i) { return s * v[i]; });
}

VectorQ VectorQ::operator-() const {
  return VectorQ::generate(size(), [&](std::size_t i) { return -entries_[i]; });
}

Rational dot(const VectorQ& a, const VectorQ& b) {
  require_same_length(a, b, "dot");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
  return s;
}

// ----------------------------------------------------------------- MatrixQ

MatrixQ::MatrixQ(std::size_t rows, std::size_t cols,
                 std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) {
    throw DimensionError("MatrixQ: dimensions must be >= 1");
  }
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("MatrixQ: entry count does not match rows*cols");
  }
}

MatrixQ MatrixQ::generate(
    std::size_t rows, std::size_t cols,
    const std::function<Rational(std::size_t, std::size_t)>& fn) {
  std::vector<Rational> out;
  out.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out.push_back(fn(i, j));
  }
  return MatrixQ(rows, cols, std::move(out));
}

MatrixQ MatrixQ::from_rows(
    std::initializer_list<std::initializer_list<Rational>> rows) {
  std::vector<std::vector<Rational>> tmp;
  for (const auto& r : rows) tmp.emplace_back(r);
  return from_rows(tmp);
}

MatrixQ MatrixQ::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) throw DimensionError("MatrixQ::from_rows: no rows");
  const std::size_t cols = rows.front().size();
  std::vector<Rational> out;
  out.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw DimensionError("MatrixQ::from_rows: ragged rows");
    out.insert(out.end(), r.begin(), r.end());
  }
  return MatrixQ(rows.size(), cols, std::move(out));
}

MatrixQ MatrixQ::zeros(std::size_t rows, std::size_t cols) {
  return MatrixQ(rows, cols, std::vector<Rational>(rows * cols, Rational(0)));
}

MatrixQ MatrixQ::ones(std::size_t rows, std::size_t cols) {
  return MatrixQ(rows, cols, std::vector<Rational>(rows * cols, Rational(1)));
}

MatrixQ MatrixQ::diagonal(const VectorQ& diag) {
  return generate(diag.size(), diag.size(), [&](std::size_t i, std::size_t j) {
    return i == j ? diag[i] : Rational(0);
  });
}

MatrixQ MatrixQ::column(const VectorQ& v) {
  return MatrixQ(v.size(), 1,
                 std::vector<Rational>(v.entries().begin(), v.entries().end()));
}

MatrixQ MatrixQ::row(const VectorQ& v) {
  return MatrixQ(1, v.size(),
                 std::vector<Rational>(v.entries().begin(), v.entries().end()));
}

const Rational& MatrixQ::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw DimensionError("MatrixQ: index out of range");
  return (*this)(i, j);
}

VectorQ MatrixQ::row_vector(std::size_t i) const {
  if (i >= rows_) throw DimensionError("MatrixQ::row_vector: out of range");
  return VectorQ::generate(cols_, [&](std::size_t j) { return (*this)(i, j); });
}

VectorQ MatrixQ::column_vector(std::size_t j) const {
  if (j >= cols_) throw DimensionError("MatrixQ::column_vector: out of range");
  return VectorQ::generate(rows_, [&](std::size_t i) { return (*this)(i, j); });
}

MatrixQ MatrixQ::block(std::size_t row0, std::size_t col0, std::size_t nrows,
                       std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) {
    throw DimensionError("MatrixQ::block: block exceeds matrix bounds");
  }
  return generate(nrows, ncols, [&](std::size_t i, std::size_t j) {
    return (*this)(row0 + i, col0 + j);
  });
}

MatrixQ MatrixQ::transpose() const {
  return generate(cols_, rows_,
                  [&](std::size_t i, std::size_t j) { return (*this)(j, i); });
}

bool MatrixQ::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if (!((*this)(i, j) == (*this)(j, i))) return false;
    }
  }
  return true;
}

bool MatrixQ::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& x) { return x.is_zero(); });
}

bool MatrixQ::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!((*this)(i, j) == Rational(i == j ? 1 : 0))) return false;
    }
  }
  return true;
}

namespace {
void require_same_shape(const MatrixQ& a, const MatrixQ& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string("MatrixQ ") + op + ": shape mismatch");
  }
}
}  // namespace

MatrixQ operator+(const MatrixQ& a, const MatrixQ& b) {
  require_same_shape(a, b, "+");
  return MatrixQ::generate(a.rows(), a.cols(), [&](std::size_t i, std::size_t j) {
    return a(i, j) + b(i, j);
  });
}

MatrixQ operator-(const MatrixQ& a, const MatrixQ& b) {
  require_same_shape(a, b, "-");
  return MatrixQ::generate(a.rows(), a.cols(), [&](std::size_t i, std::size_t j) {
    return a(i, j) - b(i, j);
  });
}

MatrixQ operator*(const Rational& s, const MatrixQ& m) {
  return MatrixQ::generate(m.rows(), m.cols(),
                           [&](std::size_t i, std::size_t j) { return s * m(i, j); });
}

MatrixQ MatrixQ::operator-() const { return Rational(-1) * *this; }

MatrixQ identity(std::size_t n) {
  if (n == 0) throw DimensionError("identity: order must be >= 1");
  return MatrixQ::generate(
      n, n, [](std::size_t i, std::size_t j) { return Rational(i == j ? 1 : 0); });
}

MatrixQ mat_mul(const MatrixQ& a, const MatrixQ& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("mat_mul: inner dimensions differ (" +
                         std::to_string(a.cols()) + " vs " +
                         std::to_string(b.rows()) + ")");
  }
  // Accumulate in mpq directly; the Rational wrapper would allocate a
  // temporary per term.
  std::vector<Rational> out;
  out.reserve(a.rows() * b.cols());
  mpq_class acc;
  mpq_class term;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const auto& x = a(i, k).raw();
        if (sgn(x) == 0) continue;
        const auto& y = b(k, j).raw();
        if (sgn(y) == 0) continue;
        mpq_mul(term.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
        acc += term;
      }
      out.emplace_back(acc.get_num(), acc.get_den());
    }
  }
  return MatrixQ(a.rows(), b.cols(), std::move(out));
}

VectorQ mat_vec(const MatrixQ& a, const VectorQ& x) {
  if (a.cols() != x.size()) throw DimensionError("mat_vec: dimension mismatch");
  return VectorQ::generate(a.rows(), [&](std::size_t i) {
    Rational s;
    for (std::size_t k = 0; k < a.cols(); ++k) s = s + a(i, k) * x[k];
    return s;
  });
}

VectorQ vec_mat(const VectorQ& x, const MatrixQ& a) {
  if (a.rows() != x.size()) throw DimensionError("vec_mat: dimension mismatch");
  return VectorQ::generate(a.cols(), [&](std::size_t j) {
    Rational s;
    for (std::size_t k = 0; k < a.rows(); ++k) s = s + x[k] * a(k, j);
    return s;
  });
}

MatrixQ outer(const VectorQ& a, const VectorQ& b) {
  return MatrixQ::generate(a.size(), b.size(),
                           [&](std::size_t i, std::size_t j) { return a[i] * b[j]; });
}

MatrixQ block_compose(const MatrixQ& tl, const MatrixQ& tr, const MatrixQ& bl,
                      const MatrixQ& br) {
  const std::size_t m = br.rows();
  if (tl.rows() != 1 || tl.cols() != 1 || tr.rows() != 1 || tr.cols() != m ||
      bl.rows() != m || bl.cols() != 1 || br.cols() != m) {
    throw DimensionError(
        "block_compose: expected 1x1, 1xm, mx1 and mxm blocks");
  }
  return MatrixQ::generate(m + 1, m + 1, [&](std::size_t i, std::size_t j) {
    if (i == 0) return j == 0 ? tl(0, 0) : tr(0, j - 1);
    return j == 0 ? bl(i - 1, 0) : br(i - 1, j - 1);
  });
}

BorderedBlocks split_bordered(const MatrixQ& m) {
  if (!m.is_square() || m.rows() < 2) {
    throw DimensionError("split_bordered: need a square matrix of order >= 2");
  }
  const std::size_t k = m.rows() - 1;
  return {m.block(0, 0, 1, 1), m.block(0, 1, 1, k), m.block(1, 0, k, 1),
          m.block(1, 1, k, k)};
}

MatrixQ block_diag(const MatrixQ& a, const MatrixQ& b) {
  return MatrixQ::generate(
      a.rows() + b.rows(), a.cols() + b.cols(), [&](std::size_t i, std::size_t j) {
        if (i < a.rows() && j < a.cols()) return a(i, j);
        if (i >= a.rows() && j >= a.cols()) return b(i - a.rows(), j - a.cols());
        return Rational(0);
      });
}

std::ostream& operator<<(std::ostream& os, const VectorQ& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) os << ", ";
    os << v[i];
  }
  return os << ')';
}

std::ostream& operator<<(std::ostream& os, const MatrixQ& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j != 0) os << ", ";
      os << m(i, j);
    }
    os << "]\n";
  }
  return os;
}

}  // namespace eccwheel
