#pragma once

// The identity  sum_j p_j(z) q_j(conj z) = r(z) |z|^2  for homogeneous,
// linearly independent p_1..p_m, in its equivalent matrix form
// p(z) Q = r(z) z, with Q an m x n constant matrix.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "crspan/exact.hpp"
#include "crspan/multipoly.hpp"

namespace crspan {

class IdentityProblem {
 public:
  /// Validates: n >= 1, degree >= 1, p nonempty, each p_j a zeta-free
  /// polynomial in n variables, homogeneous of `degree`, and the p_j
  /// linearly independent. Throws Error(kPrecondition) otherwise.
  IdentityProblem(std::size_t n, std::uint32_t degree, std::vector<MultiPoly> p);

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return p_.size(); }
  std::uint32_t degree() const noexcept { return degree_; }
  const std::vector<MultiPoly>& p() const noexcept { return p_; }

 private:
  std::size_t n_;
  std::uint32_t degree_;
  std::vector<MultiPoly> p_;
};

struct SolutionPair {
  ExactMatrix q;  // m x n
  MultiPoly r;    // homogeneous of degree d-1 in n variables
};

struct SolutionSpace {
  std::size_t dim = 0;
  std::vector<SolutionPair> basis;
};

/// Minimal k in 0..n-1 with m < sum_{j=0}^k (n-j); nullopt when
/// m >= n(n+1)/2. Throws Error(kPrecondition) for n < 2 or m < 1.
std::optional<std::size_t> lemma_bound(std::size_t n, std::size_t m);

/// True iff p(z) Q == r(z) z as polynomials.
bool satisfies_matrix_form(const IdentityProblem& prob, const SolutionPair& s);

/// Unknowns: the m*n entries of Q followed by the coefficients of r.
SolutionSpace solve_matrix_form(const IdentityProblem& prob);

/// Unknowns: the linear forms q_j(zeta) and r(z), matched coefficientwise
/// in the mixed (z, zeta) ring. Q_{j,c} is the coefficient of zeta_c in q_j.
SolutionSpace solve_conjugate_form(const IdentityProblem& prob);

struct BoundReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::optional<std::size_t> bound;
  std::size_t dim = 0;
  bool violation = false;
  bool tight = false;
};

BoundReport check_bound(const IdentityProblem& prob);

/// Degree-2 monomials z_a z_b (a <= b) in the order z_1^2, z_1 z_2, ...,
/// z_1 z_n, z_2^2, ..., z_n^2.
std::vector<MultiPoly> quadratic_monomial_order(std::size_t n);

struct SharpExample {
  IdentityProblem problem;
  /// r = z_1, ..., z_k with their explicit Q.
  std::vector<SolutionPair> solutions;
};

/// First m = sum_{j=0}^{k-1}(n-j) monomials of the quadratic order (ending
/// at z_k z_n) with k explicit solutions. Requires 1 <= k <= n-1.
SharpExample sharp_example(std::size_t n, std::size_t k);

/// Problem built from the first sum_{j=0}^{k}(n-j) monomials instead.
IdentityProblem sharp_example_long_prefix(std::size_t n, std::size_t k);

struct Decomposition {
  /// Rows span the intersection of the left kernels {v : v Q^(i) = 0}.
  std::vector<ExactVector> kernel_basis;
  /// h_j, one per kernel vector, homogeneous of degree d.
  std::vector<MultiPoly> h;
  /// s^(i): m linear polynomials per solution.
  std::vector<std::vector<MultiPoly>> s;
  /// r^(i) of the input solutions.
  std::vector<MultiPoly> r;
};

/// Constructive decomposition p = sum_j h_j v_j + sum_i r^(i) s^(i).
/// Throws Error(kNotASolution) / Error(kDependentSolutions) on bad input.
Decomposition decompose(const IdentityProblem& prob, std::span<const SolutionPair> solutions);

/// sum_j h_j v_j + sum_i r^(i) s^(i), componentwise.
std::vector<MultiPoly> reconstruct(const Decomposition& dec, std::size_t m, std::size_t n);

}  // namespace crspan
