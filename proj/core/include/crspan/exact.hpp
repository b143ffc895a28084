#pragma once

// Exact arithmetic over the Gaussian rationals Q(i) and dense exact linear
// algebra on top of it. Rationals are GMP mpq_class values.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace crspan {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q" or "p" (optional sign, decimal digits only). Throws
/// Error(kParse) on anything else or on a zero denominator.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// a + b*i with a, b rational, always stored in canonical (reduced) form.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT: implicit by design of literals
  GaussianRational(const Rational& re);    // NOLINT
  GaussianRational(const Rational& re, const Rational& im);

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const noexcept { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |a + bi|^2 = a^2 + b^2.
  Rational norm2() const { return re_ * re_ + im_ * im_; }
  /// Multiplicative inverse; throws Error(kDivisionByZero) on zero.
  GaussianRational inverse() const;

  /// Total bit length of the four integers involved; used as a pivot cost.
  std::size_t bit_size() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// "3/5", "-4/5*i", "3/5+4/5*i".
std::string to_string(const GaussianRational& z);
/// Decimal approximation "0.6+0.8i" for human tables only.
std::string approx_string(const GaussianRational& z, int digits = 6);

/// A point (c, s) on the unit circle with rational coordinates.
struct CirclePoint {
  Rational c;
  Rational s;
};

/// Rational parametrization ((1-u^2)/(1+u^2), 2u/(1+u^2)).
CirclePoint circle_point(const Rational& u);

using ExactVector = std::vector<GaussianRational>;

/// Dense immutable matrix over Q(i), row-major.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries);
  ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_rows(std::span<const ExactVector> rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  const GaussianRational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  const std::vector<GaussianRational>& entries() const noexcept { return entries_; }
  ExactVector row(std::size_t r) const;
  ExactVector col(std::size_t c) const;

  bool is_zero() const;

  ExactMatrix transpose() const;
  ExactMatrix with_entry(std::size_t r, std::size_t c, const GaussianRational& v) const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

  /// M * v for a column vector v.
  ExactVector apply(std::span<const GaussianRational> v) const;
  /// v * M for a row vector v.
  ExactVector apply_left(std::span<const GaussianRational> v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> entries_;
};

/// Reduced row-echelon form together with its pivot columns.
struct RowEchelon {
  ExactMatrix reduced;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination. Within each column the nonzero candidate with
/// the smallest bit size is chosen as pivot (ties: lowest row), so the
/// result is deterministic for a fixed input.
RowEchelon row_echelon(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

/// Basis of {v : M v = 0}, one vector per free column, with that free
/// coordinate equal to 1.
std::vector<ExactVector> nullspace(const ExactMatrix& m);

/// Some X with A X = B, or nullopt when the system is inconsistent.
std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b);

/// S with S A = I (A must have full column rank).
std::optional<ExactMatrix> left_inverse(const ExactMatrix& a);
/// T with A T = I (A must have full row rank).
std::optional<ExactMatrix> right_inverse(const ExactMatrix& a);

}  // namespace crspan
