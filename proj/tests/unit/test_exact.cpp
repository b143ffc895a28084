#include <doctest.h>

#include <random>

#include "crspan/error.hpp"
#include "crspan/exact.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace crspan;

namespace {

const GaussianRational I = GaussianRational::i();

bool is_error(ErrorKind kind, auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

TEST_CASE("gaussian rationals are canonical") {
  GaussianRational a(Rational(6, 8), Rational(-2, 4));
  CHECK(a.re() == Rational(3, 4));
  CHECK(a.re().get_num() == 3);
  CHECK(a.re().get_den() == 4);
  CHECK(a.im().get_den() == 2);
  CHECK(a == GaussianRational(Rational(3, 4), Rational(-1, 2)));
  CHECK(to_string(GaussianRational(Rational(3, 5), Rational(4, 5))) == "3/5+4/5*i");
  CHECK(to_string(GaussianRational(-2)) == "-2");
  CHECK(to_string(-I) == "-i");
}

TEST_CASE("gaussian arithmetic") {
  const GaussianRational z(Rational(3, 5), Rational(4, 5));
  CHECK(z * z.conj() == GaussianRational(1));
  CHECK(z.norm2() == 1);
  CHECK(I * I == GaussianRational(-1));
  CHECK(z * z.inverse() == GaussianRational(1));
  CHECK((GaussianRational(1) + I) / (GaussianRational(1) - I) == I);
  CHECK(is_error(ErrorKind::kDivisionByZero, [] { (void)GaussianRational(0).inverse(); }));
  CHECK(is_error(ErrorKind::kDivisionByZero, [] { (void)(GaussianRational(1) / GaussianRational(0)); }));
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3/5") == Rational(3, 5));
  CHECK(parse_rational("-4") == -4);
  CHECK(parse_rational("6/8") == Rational(3, 4));
  CHECK(is_error(ErrorKind::kParse, [] { (void)parse_rational("1/0"); }));
  CHECK(is_error(ErrorKind::kParse, [] { (void)parse_rational("abc"); }));
  CHECK(is_error(ErrorKind::kParse, [] { (void)parse_rational(""); }));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const auto a = gen::small_gaussian(rng), b = gen::small_gaussian(rng), c = gen::small_gaussian(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == GaussianRational(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == GaussianRational(1));
    CHECK((a * b).conj() == a.conj() * b.conj());
  }
}

TEST_CASE("circle_point") {
  CHECK(circle_point(0).c == 1);
  CHECK(circle_point(0).s == 0);
  CHECK(circle_point(Rational(1, 2)).c == Rational(3, 5));
  CHECK(circle_point(Rational(1, 2)).s == Rational(4, 5));
  CHECK(circle_point(1).c == 0);
  CHECK(circle_point(1).s == 1);

  std::mt19937_64 rng(5);
  for (int t = 0; t < 1000; ++t) {
    const auto cp = circle_point(gen::small_rational(rng, 1000, 997));
    CHECK(cp.c * cp.c + cp.s * cp.s == 1);
  }
}

TEST_CASE("rank examples") {
  CHECK(rank(ExactMatrix::identity(3)) == 3);
  CHECK(rank(ExactMatrix{{1, I}, {I, -1}}) == 1);
  CHECK(rank(ExactMatrix(3, 4)) == 0);
  CHECK(rank(ExactMatrix(0, 4)) == 0);
}

TEST_CASE("nullspace examples") {
  CHECK(nullspace(ExactMatrix::identity(2)).empty());

  const ExactMatrix row{{1, 1}};
  const auto ns = nullspace(row);
  REQUIRE(ns.size() == 1);
  CHECK(ns[0][0] == -ns[0][1]);
  CHECK(!ns[0][0].is_zero());

  const ExactMatrix m{{1, I}, {I, -1}};
  const auto ns2 = nullspace(m);
  REQUIRE(ns2.size() == 1);
  CHECK(ns2[0][0] + I * ns2[0][1] == GaussianRational(0));

  CHECK(nullspace(ExactMatrix(2, 3)).size() == 3);
}

TEST_CASE("solve and one-sided inverses") {
  const ExactMatrix a{{1, 2}, {3, 4}};
  const ExactMatrix b{{5}, {6}};
  const auto x = solve(a, b);
  REQUIRE(x);
  CHECK(a * *x == b);
  CHECK(!solve(ExactMatrix{{1, 1}, {1, 1}}, ExactMatrix{{1}, {2}}));

  const ExactMatrix tall{{1, 0}, {I, 1}, {2, 3}};
  const auto li = left_inverse(tall);
  REQUIRE(li);
  CHECK(*li * tall == ExactMatrix::identity(2));
  const auto ri = right_inverse(tall.transpose());
  REQUIRE(ri);
  CHECK(tall.transpose() * *ri == ExactMatrix::identity(2));
  CHECK(!left_inverse(ExactMatrix{{1, 1}, {1, 1}, {2, 2}}));
}

TEST_CASE("matrix operations") {
  const ExactMatrix a{{1, I}, {0, 2}};
  CHECK(a.transpose() == ExactMatrix{{1, 0}, {I, 2}});
  CHECK(a * ExactMatrix::identity(2) == a);
  CHECK((a + a) - a == a);
  const ExactVector v{1, 1};
  CHECK(a.apply(v) == ExactVector{GaussianRational(1) + I, 2});
  CHECK(a.apply_left(v) == ExactVector{1, I + GaussianRational(2)});
  CHECK(is_error(ErrorKind::kVariableMismatch, [&] { (void)(a * ExactMatrix(3, 3)); }));
}

TEST_CASE("rank properties against the realified oracle") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  std::uniform_int_distribution<int> sparse(0, 2);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = dim(rng), c = dim(rng);
    std::vector<GaussianRational> e(r * c);
    for (auto& x : e)
      if (sparse(rng) != 0) x = gen::small_gaussian(rng, 3, 2);
    // force some dependence
    if (r > 2) {
      for (std::size_t j = 0; j < c; ++j) e[(r - 1) * c + j] = e[j] * GaussianRational(2) - e[c + j] * I;
    }
    const ExactMatrix m(r, c, e);
    const std::size_t rk = rank(m);
    CHECK(rk == oracle::complex_rank(m));
    CHECK(rk == rank(m.transpose()));
    const auto ns = nullspace(m);
    CHECK(rk + ns.size() == c);
    for (const auto& v : ns) {
      for (const auto& x : m.apply(v)) CHECK(x.is_zero());
    }
    const auto ech = row_echelon(m);
    CHECK(row_echelon(ech.reduced).reduced == ech.reduced);
  }
}

TEST_CASE("deterministic elimination") {
  std::mt19937_64 rng(3);
  std::vector<GaussianRational> e(16);
  for (auto& x : e) x = gen::small_gaussian(rng);
  const ExactMatrix m(4, 4, e);
  CHECK(nullspace(m) == nullspace(m));
  CHECK(row_echelon(m).reduced == row_echelon(m).reduced);
}
