#include "crspan/identity.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "crspan/error.hpp"

namespace crspan {

namespace {

std::size_t triangular(std::size_t n) { return n * (n + 1) / 2; }

std::size_t prefix_sum(std::size_t n, std::size_t k) { return (k + 1) * n - k * (k + 1) / 2; }

std::map<Monomial, std::size_t, GrlexLess> index_of(const std::vector<Monomial>& monos) {
  std::map<Monomial, std::size_t, GrlexLess> idx;
  for (std::size_t i = 0; i < monos.size(); ++i) idx.emplace(monos[i], i);
  return idx;
}

// Row vector of polynomials times a constant matrix: out_c = sum_a w_a M_{a,c}.
std::vector<MultiPoly> times(std::span<const MultiPoly> w, const ExactMatrix& m, std::size_t vars) {
  if (w.size() != m.rows()) throw Error(ErrorKind::kVariableMismatch, "polynomial row / matrix mismatch");
  std::vector<MultiPoly> out(m.cols(), MultiPoly(vars));
  for (std::size_t a = 0; a < m.rows(); ++a) {
    if (w[a].is_zero()) continue;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(a, c).is_zero()) out[c] += w[a].scale(m(a, c));
  }
  return out;
}

std::vector<MultiPoly> coordinate_row(std::size_t n) {
  std::vector<MultiPoly> z;
  z.reserve(n);
  for (std::size_t c = 0; c < n; ++c) z.push_back(MultiPoly::z(n, c));
  return z;
}

SolutionSpace unpack(const IdentityProblem& prob, const std::vector<Monomial>& r_monos,
                     const std::vector<ExactVector>& kernel) {
  const std::size_t m = prob.m();
  const std::size_t n = prob.n();
  SolutionSpace out;
  out.dim = kernel.size();
  out.basis.reserve(kernel.size());
  for (const auto& v : kernel) {
    std::vector<GaussianRational> q(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m * n));
    MultiPoly r(n);
    for (std::size_t t = 0; t < r_monos.size(); ++t) r.add_term(r_monos[t], v[m * n + t]);
    out.basis.push_back({ExactMatrix(m, n, std::move(q)), std::move(r)});
  }
  return out;
}

}  // namespace

IdentityProblem::IdentityProblem(std::size_t n, std::uint32_t degree, std::vector<MultiPoly> p)
    : n_(n), degree_(degree), p_(std::move(p)) {
  if (n_ < 1) throw Error(ErrorKind::kPrecondition, "identity problem needs n >= 1");
  if (degree_ < 1) throw Error(ErrorKind::kPrecondition, "identity problem needs degree >= 1");
  if (p_.empty()) throw Error(ErrorKind::kPrecondition, "identity problem needs at least one polynomial");
  for (std::size_t j = 0; j < p_.size(); ++j) {
    const std::string which = "p_" + std::to_string(j + 1);
    if (p_[j].vars() != n_) throw Error(ErrorKind::kPrecondition, which + " is not a polynomial in n variables");
    if (p_[j].has_zeta_support()) throw Error(ErrorKind::kPrecondition, which + " depends on conjugate variables");
    if (p_[j].is_zero() || !p_[j].is_homogeneous(degree_)) {
      throw Error(ErrorKind::kPrecondition, which + " is not homogeneous of degree " + std::to_string(degree_));
    }
  }
  const std::size_t rk = rank(coefficient_matrix(p_).matrix);
  if (rk != p_.size()) {
    throw Error(ErrorKind::kPrecondition, "polynomials are linearly dependent: rank " + std::to_string(rk) +
                                              " < m = " + std::to_string(p_.size()));
  }
}

std::optional<std::size_t> lemma_bound(std::size_t n, std::size_t m) {
  if (n < 2) throw Error(ErrorKind::kPrecondition, "lemma_bound needs n >= 2");
  if (m < 1) throw Error(ErrorKind::kPrecondition, "lemma_bound needs m >= 1");
  for (std::size_t k = 0; k < n; ++k)
    if (m < prefix_sum(n, k)) return k;
  return std::nullopt;
}

bool satisfies_matrix_form(const IdentityProblem& prob, const SolutionPair& s) {
  if (s.q.rows() != prob.m() || s.q.cols() != prob.n() || s.r.vars() != prob.n()) return false;
  const std::vector<MultiPoly> lhs = times(prob.p(), s.q, prob.n());
  for (std::size_t c = 0; c < prob.n(); ++c)
    if (lhs[c] != s.r * MultiPoly::z(prob.n(), c)) return false;
  return true;
}

SolutionSpace solve_matrix_form(const IdentityProblem& prob) {
  const std::size_t n = prob.n();
  const std::size_t m = prob.m();
  const std::vector<Monomial> eq_monos = z_monomials_of_degree(n, prob.degree());
  const std::vector<Monomial> r_monos = z_monomials_of_degree(n, prob.degree() - 1);
  const auto eq_index = index_of(eq_monos);
  const std::size_t unknowns = m * n + r_monos.size();
  const std::size_t rows = n * eq_monos.size();

  std::vector<GaussianRational> a(rows * unknowns);
  auto at = [&](std::size_t row, std::size_t col) -> GaussianRational& { return a[row * unknowns + col]; };
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t base = c * eq_monos.size();
    // sum_j p_j Q_{j,c}
    for (std::size_t j = 0; j < m; ++j)
      for (const auto& [mono, coeff] : prob.p()[j].terms()) at(base + eq_index.at(mono), j * n + c) += coeff;
    // - r z_c
    const Monomial zc = Monomial(n).with_exponent(c, VarKind::kZ, 1);
    for (std::size_t t = 0; t < r_monos.size(); ++t) at(base + eq_index.at(r_monos[t] * zc), m * n + t) -= 1;
  }
  return unpack(prob, r_monos, nullspace(ExactMatrix(rows, unknowns, std::move(a))));
}

SolutionSpace solve_conjugate_form(const IdentityProblem& prob) {
  const std::size_t n = prob.n();
  const std::size_t m = prob.m();
  const std::vector<Monomial> r_monos = z_monomials_of_degree(n, prob.degree() - 1);
  const MultiPoly norm2 = hermitian_square(n);

  // Contribution of each unknown to sum_j p_j q_j(zeta) - r(z) |z|^2.
  std::vector<MultiPoly> contributions;
  contributions.reserve(m * n + r_monos.size());
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t c = 0; c < n; ++c) contributions.push_back(prob.p()[j] * MultiPoly::zeta(n, c));
  for (const auto& mono : r_monos) contributions.push_back(-(MultiPoly::term(mono, 1) * norm2));

  const CoefficientMatrix cm = coefficient_matrix(contributions);
  return unpack(prob, r_monos, nullspace(cm.matrix.transpose()));
}

BoundReport check_bound(const IdentityProblem& prob) {
  BoundReport rep;
  rep.n = prob.n();
  rep.m = prob.m();
  if (prob.n() >= 2) rep.bound = lemma_bound(prob.n(), prob.m());
  rep.dim = solve_matrix_form(prob).dim;
  rep.violation = rep.bound && rep.dim > *rep.bound;
  rep.tight = rep.bound && rep.dim == *rep.bound;
  return rep;
}

std::vector<MultiPoly> quadratic_monomial_order(std::size_t n) {
  std::vector<MultiPoly> out;
  out.reserve(triangular(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) out.push_back(MultiPoly::z(n, a) * MultiPoly::z(n, b));
  return out;
}

SharpExample sharp_example(std::size_t n, std::size_t k) {
  if (n < 2 || k < 1 || k > n - 1) {
    throw Error(ErrorKind::kPrecondition, "sharp_example needs n >= 2 and 1 <= k <= n-1");
  }
  const std::size_t m = prefix_sum(n, k - 1);
  std::vector<MultiPoly> order = quadratic_monomial_order(n);
  order.resize(m);
  IdentityProblem prob(n, 2, std::move(order));

  // Position of z_a z_b (a <= b) in the quadratic order.
  auto position = [n](std::size_t a, std::size_t b) { return a * (2 * n - a + 1) / 2 + (b - a); };
  std::vector<SolutionPair> solutions;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<GaussianRational> q(m * n);
    for (std::size_t c = 0; c < n; ++c) q[position(std::min(i, c), std::max(i, c)) * n + c] = 1;
    SolutionPair s{ExactMatrix(m, n, std::move(q)), MultiPoly::z(n, i)};
    if (!satisfies_matrix_form(prob, s)) {
      throw Error(ErrorKind::kInvariantViolation, "constructed sharp solution " + std::to_string(i + 1) + " fails");
    }
    solutions.push_back(std::move(s));
  }
  return SharpExample{std::move(prob), std::move(solutions)};
}

IdentityProblem sharp_example_long_prefix(std::size_t n, std::size_t k) {
  if (n < 2 || k < 1 || k > n - 1) {
    throw Error(ErrorKind::kPrecondition, "sharp_example_long_prefix needs n >= 2 and 1 <= k <= n-1");
  }
  std::vector<MultiPoly> order = quadratic_monomial_order(n);
  order.resize(prefix_sum(n, k));
  return IdentityProblem(n, 2, std::move(order));
}

Decomposition decompose(const IdentityProblem& prob, std::span<const SolutionPair> solutions) {
  const std::size_t n = prob.n();
  const std::size_t m = prob.m();
  for (std::size_t i = 0; i < solutions.size(); ++i) {
    if (!satisfies_matrix_form(prob, solutions[i])) {
      throw Error(ErrorKind::kNotASolution, "pair " + std::to_string(i + 1) + " does not solve p(z)Q = r(z)z");
    }
  }
  if (!solutions.empty()) {
    std::vector<ExactVector> flat;
    for (const auto& s : solutions) flat.push_back(s.q.entries());
    if (rank(ExactMatrix::from_rows(flat, m * n)) != solutions.size()) {
      throw Error(ErrorKind::kDependentSolutions, "solution matrices Q are linearly dependent");
    }
  }

  const std::vector<MultiPoly> z = coordinate_row(n);
  Decomposition dec;
  for (const auto& s : solutions) dec.r.push_back(s.r);

  // Start from p = sum_a p_a e_a.
  std::vector<ExactVector> kernel;
  for (std::size_t a = 0; a < m; ++a) {
    ExactVector e(m);
    e[a] = 1;
    kernel.push_back(std::move(e));
  }
  std::vector<MultiPoly> h = prob.p();

  for (std::size_t step = 0; step < solutions.size(); ++step) {
    const ExactMatrix& q = solutions[step].q;
    if (step == 0) {
      // Q has rank n, so S Q = I for some S; p - r zS takes values in ker Q.
      const auto left = left_inverse(q);
      if (!left) throw Error(ErrorKind::kInvariantViolation, "nonzero solution Q without full column rank");
      const std::vector<MultiPoly> s = times(z, *left, n);
      kernel = nullspace(q.transpose());
      std::vector<MultiPoly> w = prob.p();
      for (std::size_t a = 0; a < m; ++a) w[a] -= solutions[0].r * s[a];
      h.clear();
      if (!kernel.empty()) {
        const ExactMatrix v = ExactMatrix::from_rows(kernel, m);
        const auto vr = right_inverse(v);
        if (!vr) throw Error(ErrorKind::kInvariantViolation, "kernel basis is not independent");
        h = times(w, *vr, n);
        if (times(h, v, n) != w) {
          throw Error(ErrorKind::kInvariantViolation, "p - r s does not take values in ker Q");
        }
      } else {
        for (const auto& wa : w)
          if (!wa.is_zero()) throw Error(ErrorKind::kInvariantViolation, "p - r s is nonzero with trivial ker Q");
      }
      dec.s.push_back(s);
      continue;
    }

    const std::size_t k0 = kernel.size();
    std::vector<MultiPoly> s_new(m, MultiPoly(n));
    if (k0 > 0) {
      const ExactMatrix v0 = ExactMatrix::from_rows(kernel, m);
      const ExactMatrix a = v0 * q;  // k0 x n
      std::vector<ExactVector> basis = nullspace(a.transpose());
      const std::size_t k1 = basis.size();
      // Complete to a basis of C^{k0} with standard vectors.
      std::size_t current = k1;
      for (std::size_t i = 0; i < k0 && current < k0; ++i) {
        ExactVector e(k0);
        e[i] = 1;
        basis.push_back(e);
        if (rank(ExactMatrix::from_rows(basis, k0)) == current + 1) {
          ++current;
        } else {
          basis.pop_back();
        }
      }
      const ExactMatrix b = ExactMatrix::from_rows(basis, k0);
      const auto b_inv = solve(b, ExactMatrix::identity(k0));
      if (!b_inv) throw Error(ErrorKind::kInvariantViolation, "basis change is singular");
      const ExactMatrix v_new = b * v0;
      const std::vector<MultiPoly> h_new = times(h, *b_inv, n);

      if (k1 < k0) {
        std::vector<ExactVector> r_rows;
        for (std::size_t i = k1; i < k0; ++i) r_rows.push_back(v_new.row(i));
        const ExactMatrix r_mat = ExactMatrix::from_rows(r_rows, m);
        const auto t = right_inverse(r_mat * q);
        if (!t) throw Error(ErrorKind::kInvariantViolation, "R Q is not injective");
        const ExactMatrix proj = *t * r_mat;  // n x m
        s_new = times(z, proj, n);
        const ExactMatrix keep = ExactMatrix::identity(m) - q * proj;
        for (auto& s : dec.s) s = times(s, keep, n);
      }
      kernel.clear();
      h.clear();
      for (std::size_t i = 0; i < k1; ++i) {
        kernel.push_back(v_new.row(i));
        h.push_back(h_new[i]);
      }
    }
    dec.s.push_back(std::move(s_new));
  }

  dec.kernel_basis = std::move(kernel);
  dec.h = std::move(h);
  if (reconstruct(dec, m, n) != prob.p()) {
    throw Error(ErrorKind::kInvariantViolation, "decomposition does not reconstruct p");
  }
  return dec;
}

std::vector<MultiPoly> reconstruct(const Decomposition& dec, std::size_t m, std::size_t n) {
  std::vector<MultiPoly> out(m, MultiPoly(n));
  for (std::size_t j = 0; j < dec.kernel_basis.size(); ++j)
    for (std::size_t a = 0; a < m; ++a)
      if (!dec.kernel_basis[j][a].is_zero()) out[a] += dec.h[j].scale(dec.kernel_basis[j][a]);
  for (std::size_t i = 0; i < dec.s.size(); ++i)
    for (std::size_t a = 0; a < m; ++a) out[a] += dec.r[i] * dec.s[i][a];
  return out;
}

}  // namespace crspan
