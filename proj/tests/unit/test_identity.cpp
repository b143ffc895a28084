#include <doctest.h>

#include <random>

#include "crspan/error.hpp"
#include "crspan/identity.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace crspan;

namespace {

MultiPoly z(std::size_t n, std::size_t i) { return MultiPoly::z(n, i); }

bool is_error(ErrorKind kind, auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

IdentityProblem three_of(std::size_t m) {
  std::vector<MultiPoly> p = quadratic_monomial_order(3);
  p.resize(m);
  return IdentityProblem(3, 2, std::move(p));
}

void check_space(const IdentityProblem& prob, const SolutionSpace& s) {
  CHECK(s.basis.size() == s.dim);
  std::vector<ExactVector> qs, rs;
  for (const auto& pair : s.basis) {
    CHECK(satisfies_matrix_form(prob, pair));
    CHECK(pair.q.is_zero() == pair.r.is_zero());
    qs.push_back(pair.q.entries());
  }
  if (!qs.empty()) {
    CHECK(rank(ExactMatrix::from_rows(qs, qs.front().size())) == s.dim);
    std::vector<MultiPoly> r;
    for (const auto& pair : s.basis) r.push_back(pair.r);
    CHECK(rank(coefficient_matrix(r).matrix) == s.dim);
  }
}

}  // namespace

TEST_CASE("problem preconditions") {
  CHECK(is_error(ErrorKind::kPrecondition, [] { IdentityProblem(2, 2, {z(2, 0) * z(2, 0) + z(2, 1)}); }));
  CHECK(is_error(ErrorKind::kPrecondition, [] { IdentityProblem(2, 2, {z(2, 0) * z(2, 1), z(2, 0) * z(2, 1)}); }));
  CHECK(is_error(ErrorKind::kPrecondition, [] { IdentityProblem(2, 1, {MultiPoly::zeta(2, 0)}); }));
  CHECK(is_error(ErrorKind::kPrecondition, [] { IdentityProblem(2, 1, {}); }));
  CHECK(is_error(ErrorKind::kPrecondition, [] { IdentityProblem(2, 1, {z(3, 0)}); }));
  try {
    IdentityProblem(2, 1, {z(2, 0), z(2, 0).scale(2)});
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("rank 1") != std::string::npos);
  }
}

TEST_CASE("lemma bound") {
  CHECK(lemma_bound(3, 2) == 0u);
  CHECK(lemma_bound(3, 5) == 2u);
  CHECK(!lemma_bound(3, 6));
  CHECK(lemma_bound(3, 3) == 1u);
  CHECK(is_error(ErrorKind::kPrecondition, [] { (void)lemma_bound(1, 1); }));
}

TEST_CASE("matrix form, worked instances") {
  const IdentityProblem one(2, 2, {z(2, 0) * z(2, 0)});
  CHECK(solve_matrix_form(one).dim == 0);

  const IdentityProblem p3 = three_of(3);
  const SolutionSpace s3 = solve_matrix_form(p3);
  CHECK(s3.dim == 1);
  check_space(p3, s3);
  // the solution is a multiple of r = z_1
  CHECK(rank(coefficient_matrix(std::vector{s3.basis[0].r, z(3, 0)}).matrix) == 1);

  const IdentityProblem p5 = three_of(5);
  const SolutionSpace s5 = solve_matrix_form(p5);
  CHECK(s5.dim == 2);
  check_space(p5, s5);
  std::vector<MultiPoly> rs{s5.basis[0].r, s5.basis[1].r, z(3, 0), z(3, 1)};
  CHECK(rank(coefficient_matrix(rs).matrix) == 2);

  const IdentityProblem two(2, 2, {z(2, 0) * z(2, 0), z(2, 1) * z(2, 1)});
  CHECK(solve_matrix_form(two).dim == 0);
  CHECK(solve_conjugate_form(two).dim == 0);
}

TEST_CASE("oracle agrees on worked instances") {
  CHECK(oracle::identity_dim_by_evaluation(three_of(3).p(), 3, 2, 1) == 1);
  CHECK(oracle::identity_dim_by_evaluation(three_of(5).p(), 3, 2, 1) == 2);
  CHECK(oracle::identity_dim_by_evaluation({z(2, 0) * z(2, 0), z(2, 1) * z(2, 1)}, 2, 2, 1) == 0);
  CHECK(oracle::identity_dim_by_evaluation({z(2, 0) * z(2, 0), z(2, 0) * z(2, 1)}, 2, 2, 1) == 1);
}

TEST_CASE("conjugate form") {
  const IdentityProblem p3 = three_of(3);
  // sum p_j q_j = z_1 |z|^2 with q = (zeta_1, zeta_2, zeta_3)
  MultiPoly lhs(3);
  for (std::size_t j = 0; j < 3; ++j) lhs += p3.p()[j] * MultiPoly::zeta(3, j);
  CHECK(lhs == z(3, 0) * hermitian_square(3));

  const SolutionSpace c = solve_conjugate_form(p3);
  CHECK(c.dim == 1);
  check_space(p3, c);
  CHECK(solve_conjugate_form(three_of(5)).dim == 2);
}

TEST_CASE("degree one problems") {
  const IdentityProblem lin(3, 1, {z(3, 0), z(3, 1), z(3, 2)});
  const SolutionSpace s = solve_matrix_form(lin);
  CHECK(s.dim == 1);  // Q = I, r = 1
  check_space(lin, s);
  CHECK(solve_conjugate_form(lin).dim == 1);
  CHECK(solve_matrix_form(IdentityProblem(3, 1, {z(3, 0), z(3, 1)})).dim == 0);
}

TEST_CASE("check_bound") {
  const BoundReport a = check_bound(three_of(3));
  CHECK(a.bound == 1u);
  CHECK(a.dim == 1);
  CHECK(a.tight);
  CHECK(!a.violation);
  const BoundReport b = check_bound(three_of(5));
  CHECK(b.bound == 2u);
  CHECK(b.dim == 2);
  CHECK(b.tight);
  const BoundReport full = check_bound(three_of(6));
  CHECK(!full.bound);
  CHECK(!full.violation);
}

TEST_CASE("sharp examples") {
  const SharpExample a = sharp_example(3, 1);
  CHECK(a.problem.p() == std::vector<MultiPoly>{z(3, 0) * z(3, 0), z(3, 0) * z(3, 1), z(3, 0) * z(3, 2)});
  CHECK(a.solutions.size() == 1);
  CHECK(a.solutions[0].r == z(3, 0));

  const SharpExample b = sharp_example(3, 2);
  CHECK(b.problem.m() == 5);
  CHECK(b.problem.p().back() == z(3, 1) * z(3, 2));
  CHECK(b.solutions[1].r == z(3, 1));

  const SharpExample c = sharp_example(2, 1);
  CHECK(c.problem.p() == std::vector<MultiPoly>{z(2, 0) * z(2, 0), z(2, 0) * z(2, 1)});
  CHECK(solve_matrix_form(c.problem).dim == 1);

  for (std::size_t n = 2; n <= 4; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      const SharpExample ex = sharp_example(n, k);
      for (const auto& s : ex.solutions) CHECK(satisfies_matrix_form(ex.problem, s));
      CHECK(lemma_bound(n, ex.problem.m()) == k);
      CHECK(solve_matrix_form(ex.problem).dim == k);
      CHECK(oracle::identity_dim_by_evaluation(ex.problem.p(), n, 2, n * 10 + k) == k);
    }
  }
  CHECK(is_error(ErrorKind::kPrecondition, [] { (void)sharp_example(3, 0); }));
  CHECK(is_error(ErrorKind::kPrecondition, [] { (void)sharp_example(3, 3); }));
  CHECK(is_error(ErrorKind::kPrecondition, [] { (void)sharp_example(1, 1); }));
}

TEST_CASE("long prefix reading") {
  // m = sum_{j=0}^{k} (n-j): one more block of monomials than the sharp reading
  for (std::size_t n = 2; n <= 4; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      const IdentityProblem lp = sharp_example_long_prefix(n, k);
      CHECK(lp.m() == (k + 1) * n - k * (k + 1) / 2);
      CHECK(solve_matrix_form(lp).dim == oracle::identity_dim_by_evaluation(lp.p(), n, 2, 5));
    }
  }
}

TEST_CASE("decompose") {
  const SharpExample a = sharp_example(3, 1);
  const Decomposition da = decompose(a.problem, a.solutions);
  CHECK(da.kernel_basis.empty());
  CHECK(reconstruct(da, 3, 3) == a.problem.p());

  const SharpExample b = sharp_example(3, 2);
  const Decomposition db = decompose(b.problem, b.solutions);
  CHECK(reconstruct(db, 5, 3) == b.problem.p());
  for (const auto& v : db.kernel_basis)
    for (const auto& s : b.solutions)
      for (const auto& x : s.q.apply_left(v)) CHECK(x.is_zero());

  // one solution with m > n leaves an (m - n)-dimensional kernel
  const Decomposition one = decompose(b.problem, std::vector{b.solutions[0]});
  CHECK(one.kernel_basis.size() == 2);
  CHECK(reconstruct(one, 5, 3) == b.problem.p());

  SolutionPair wrong = a.solutions[0];
  wrong.r = z(3, 1);
  CHECK(is_error(ErrorKind::kNotASolution, [&] { (void)decompose(a.problem, std::vector{wrong}); }));
  CHECK(is_error(ErrorKind::kDependentSolutions,
                 [&] { (void)decompose(b.problem, std::vector{b.solutions[0], b.solutions[0]}); }));
}

TEST_CASE("random campaign: bound, equivalence, injectivity, decomposition") {
  std::mt19937_64 rng(123);
  for (std::size_t n = 2; n <= 3; ++n) {
    for (std::uint32_t d = 2; d <= 3; ++d) {
      for (int t = 0; t < 12; ++t) {
        const IdentityProblem prob = gen::random_identity_problem(n, d, t % 3, rng);
        const SolutionSpace s = solve_matrix_form(prob);
        check_space(prob, s);
        CHECK(solve_conjugate_form(prob).dim == s.dim);
        CHECK(s.dim == oracle::identity_dim_by_evaluation(prob.p(), n, d, rng()));
        const auto bound = lemma_bound(n, prob.m());
        REQUIRE(bound);
        CHECK(s.dim <= *bound);
        if (s.dim > 0) {
          const Decomposition dec = decompose(prob, s.basis);
          CHECK(reconstruct(dec, prob.m(), n) == prob.p());
          for (const auto& v : dec.kernel_basis)
            for (const auto& pair : s.basis)
              for (const auto& x : pair.q.apply_left(v)) CHECK(x.is_zero());
        }
      }
    }
  }
}
