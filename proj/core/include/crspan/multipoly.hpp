#pragma once

// Sparse polynomials over Q(i) in holomorphic variables z_1..z_m and formal
// conjugate variables zeta_1..zeta_m. The zeta variables are independent
// indeterminates; they are tied to conj(z) only by evaluate().

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "crspan/exact.hpp"

namespace crspan {

enum class VarKind { kZ, kZeta };

/// Exponent vector over (z_1..z_m, zeta_1..zeta_m).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t vars) : exps_(2 * vars, 0) {}
  Monomial(std::vector<std::uint32_t> z, std::vector<std::uint32_t> zeta);

  std::size_t vars() const noexcept { return exps_.size() / 2; }
  std::uint32_t z(std::size_t i) const { return exps_[i]; }
  std::uint32_t zeta(std::size_t i) const { return exps_[vars() + i]; }
  std::uint32_t exponent(std::size_t i, VarKind kind) const {
    return kind == VarKind::kZ ? z(i) : zeta(i);
  }
  std::vector<std::uint32_t> z_exponents() const;
  std::vector<std::uint32_t> zeta_exponents() const;
  const std::vector<std::uint32_t>& raw() const noexcept { return exps_; }

  Monomial with_exponent(std::size_t i, VarKind kind, std::uint32_t e) const;

  std::uint32_t degree() const;
  std::uint32_t z_degree() const;
  bool has_zeta() const;
  bool is_constant() const { return degree() == 0; }

  /// True iff this divides `other` (componentwise <=).
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& o) const;
  /// other / this; caller guarantees divides(other).
  Monomial quotient_of(const Monomial& other) const;
  /// Swap z and zeta exponents.
  Monomial swapped() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

/// Graded lexicographic order, z_1 > ... > z_m > zeta_1 > ... > zeta_m.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class MultiPoly {
 public:
  using TermMap = std::map<Monomial, GaussianRational, GrlexLess>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t vars) : vars_(vars) {}

  static MultiPoly constant(std::size_t vars, const GaussianRational& c);
  static MultiPoly z(std::size_t vars, std::size_t i);
  static MultiPoly zeta(std::size_t vars, std::size_t i);
  static MultiPoly term(const Monomial& m, const GaussianRational& c);

  std::size_t vars() const noexcept { return vars_; }
  /// Terms in increasing grlex order; the leading term is the last one.
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  GaussianRational coefficient(const Monomial& m) const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool has_zeta_support() const;
  const Monomial& leading_monomial() const;
  const GaussianRational& leading_coefficient() const;

  MultiPoly& add_term(const Monomial& m, const GaussianRational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;
  MultiPoly scale(const GaussianRational& c) const;
  MultiPoly times_monomial(const Monomial& m, const GaussianRational& c) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  /// Conjugates coefficients and swaps z <-> zeta.
  MultiPoly conjugate() const;
  MultiPoly partial_derivative(std::size_t var, VarKind kind) const;
  /// Evaluates with z = point and zeta = conj(point).
  GaussianRational evaluate(std::span<const GaussianRational> point) const;

  MultiPoly homogeneous_component(std::uint32_t degree) const;
  bool is_homogeneous(std::uint32_t degree) const;

  /// Re-embeds into a ring with more variables (new ones unused).
  MultiPoly extend_vars(std::size_t vars) const;

  std::string to_string() const;

 private:
  void check_compatible(const MultiPoly& o) const;

  std::size_t vars_ = 0;
  TermMap terms_;
};

MultiPoly scale(const MultiPoly& a, const GaussianRational& c);
MultiPoly conjugate(const MultiPoly& a);
MultiPoly partial_derivative(const MultiPoly& a, std::size_t var, VarKind kind);
GaussianRational evaluate(const MultiPoly& a, std::span<const GaussianRational> point);
MultiPoly homogeneous_component(const MultiPoly& a, std::uint32_t degree);
bool is_homogeneous(const MultiPoly& a, std::uint32_t degree);

struct Division {
  MultiPoly quotient;
  MultiPoly remainder;
};

/// Division by a single polynomial in grlex order: a = quotient*h + remainder,
/// no remainder monomial divisible by LM(h). Throws on h == 0.
Division reduce_mod(const MultiPoly& a, const MultiPoly& h);

/// Coefficient matrix of a polynomial list: row i holds polys[i]; columns are
/// the union of supports in grlex order.
struct CoefficientMatrix {
  ExactMatrix matrix;
  std::vector<Monomial> columns;
};
CoefficientMatrix coefficient_matrix(std::span<const MultiPoly> polys);

/// All z-monomials of exact degree `degree` in `vars` variables, in
/// decreasing grlex order (z_1^d first).
std::vector<Monomial> z_monomials_of_degree(std::size_t vars, std::uint32_t degree);

/// Replaces each z_i of a zeta-free polynomial by images[i]; the result
/// lives in the ring of the images.
MultiPoly substitute_z(const MultiPoly& a, std::span<const MultiPoly> images);

/// sum_j z_j * zeta_j over `vars` variables.
MultiPoly hermitian_square(std::size_t vars);

}  // namespace crspan
