#include <doctest.h>

#include <random>

#include "crspan/builtins.hpp"
#include "crspan/error.hpp"
#include "crspan/json_io.hpp"
#include "generators.hpp"

using namespace crspan;
namespace cj = crspan::json;
using Json = nlohmann::json;

namespace {

Json reparse(const nlohmann::ordered_json& j) { return Json::parse(j.dump()); }

bool parse_error(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == ErrorKind::kParse;
  }
  return false;
}

}  // namespace

TEST_CASE("gaussian rational json") {
  const GaussianRational z(Rational(3, 5), Rational(-4, 5));
  const auto j = cj::to_json(z);
  CHECK(j.dump() == R"({"re":"3/5","im":"-4/5"})");
  CHECK(cj::gaussian_from_json(reparse(j)) == z);
  CHECK(cj::gaussian_from_json(Json("7/2")) == GaussianRational(Rational(7, 2)));
  CHECK(cj::gaussian_from_json(Json(3)) == GaussianRational(3));
  CHECK(parse_error([] { (void)cj::gaussian_from_json(Json(1.5)); }));
  CHECK(parse_error([] { (void)cj::gaussian_from_json(Json("x")); }));
}

TEST_CASE("polynomial json round trip") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    const MultiPoly p = gen::random_poly(3, 5, 3, rng);
    CHECK(cj::poly_from_json(reparse(cj::to_json(p)), 3) == p);
  }
  const MultiPoly z1 = MultiPoly::z(2, 0);
  const auto j = cj::to_json(z1);
  CHECK(j.dump() == R"([{"coeff":{"re":"1","im":"0"},"z":[1,0]}])");
  CHECK(parse_error([] { (void)cj::poly_from_json(Json::parse(R"([{"coeff":1,"z":[1]}])"), 2); }));
  CHECK(parse_error([] { (void)cj::poly_from_json(Json::parse(R"([{"coeff":1}])"), 2); }));
  CHECK(parse_error([] { (void)cj::poly_from_json(Json::parse(R"([{"coeff":1,"z":[-1,0]}])"), 2); }));
  CHECK(parse_error([] { (void)cj::poly_from_json(Json::parse(R"({"a":1})"), 2); }));
}

TEST_CASE("map json round trip") {
  for (const auto& f : {builtin_dt(2, Rational(1, 2)), builtin_hst(3, Rational(1, 3), Rational(2, 5)),
                        linear_embedding(1, 3)}) {
    CHECK(cj::crmap_from_json(reparse(cj::to_json(f))) == f);
  }
  CHECK(parse_error([] { (void)cj::crmap_from_json(Json::parse(R"({"n":2,"N":5})")); }));
  CHECK(parse_error([] { (void)cj::crmap_from_json(Json::parse(R"({"n":2,"N":5,"components":[]})")); }));
  CHECK(parse_error([] { (void)cj::crmap_from_json(Json::parse(R"({"n":-2,"N":5,"components":[]})")); }));
}

TEST_CASE("matrix and point json") {
  const ExactMatrix m{{1, GaussianRational::i()}, {Rational(1, 3), 0}};
  CHECK(cj::matrix_from_json(reparse(cj::to_json(m))) == m);
  const Point p = sample_sphere_point(2, 3);
  CHECK(cj::point_from_json(reparse(cj::point_to_json(p))) == p);
  CHECK(parse_error([] { (void)cj::matrix_from_json(Json::parse("[[1,2],[3]]")); }));
}

TEST_CASE("verdict json round trip") {
  const Analysis a = analyze(builtin_dt(2, Rational(1, 2)), 3, 0);
  const auto j = cj::to_json(a.verdict);
  CHECK(j["k"] == 1);
  CHECK(j["plane_bound"] == 6);
  const RigidityVerdict back = cj::verdict_from_json(reparse(j));
  CHECK(cj::to_json(back) == j);

  const Analysis h = analyze(builtin_hst(2, Rational(1, 2), Rational(1, 2)), 3, 0);
  const auto jh = cj::to_json(h.verdict);
  CHECK(jh["k"].is_null());
  CHECK(jh["plane_bound"].is_null());
  CHECK(cj::to_json(cj::verdict_from_json(reparse(jh))) == jh);
}

TEST_CASE("identity json round trip") {
  const SharpExample ex = sharp_example(3, 2);
  const IdentityProblem back = cj::identity_problem_from_json(reparse(cj::to_json(ex.problem)));
  CHECK(back.p() == ex.problem.p());
  CHECK(back.degree() == 2);

  const SolutionSpace s = solve_matrix_form(ex.problem);
  const SolutionSpace s2 = cj::solution_space_from_json(reparse(cj::to_json(s)), 3);
  REQUIRE(s2.dim == s.dim);
  for (std::size_t i = 0; i < s.dim; ++i) {
    CHECK(s2.basis[i].q == s.basis[i].q);
    CHECK(s2.basis[i].r == s.basis[i].r);
  }
  CHECK(parse_error([] { (void)cj::identity_problem_from_json(Json::parse(R"({"n":2,"p":[]})")); }));
}
