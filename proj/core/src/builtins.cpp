#include "crspan/builtins.hpp"

#include <utility>
#include <vector>

#include "crspan/error.hpp"

namespace crspan {

CRMap dt_family(std::size_t n, const GaussianRational& c, const GaussianRational& s) {
  if (n < 1) throw Error(ErrorKind::kPrecondition, "D_t needs n >= 1");
  const std::size_t vars = n + 1;
  const MultiPoly last = MultiPoly::z(vars, n);
  std::vector<MultiPoly> comps;
  comps.reserve(2 * n + 2);
  for (std::size_t j = 0; j < n; ++j) comps.push_back(MultiPoly::z(vars, j));
  comps.push_back(last.scale(c));
  for (std::size_t j = 0; j <= n; ++j) comps.push_back((MultiPoly::z(vars, j) * last).scale(s));
  return CRMap(n, 2 * n + 1, std::move(comps));
}

CRMap builtin_dt(std::size_t n, const Rational& u) {
  if (n < 2) throw Error(ErrorKind::kPrecondition, "builtin D_t needs n >= 2");
  const CirclePoint t = circle_point(u);
  return dt_family(n, t.c, t.s);
}

CRMap builtin_hst(std::size_t n, const Rational& u_s, const Rational& u_t) {
  if (n < 2) throw Error(ErrorKind::kPrecondition, "builtin H_{s,t} needs n >= 2");
  const CirclePoint s = circle_point(u_s);
  const CirclePoint t = circle_point(u_t);
  const std::size_t vars = n + 1;
  const MultiPoly zn = MultiPoly::z(vars, n - 1);
  const MultiPoly zlast = MultiPoly::z(vars, n);
  std::vector<MultiPoly> comps;
  comps.reserve(3 * n + 3);
  for (std::size_t j = 0; j + 1 < n; ++j) comps.push_back(MultiPoly::z(vars, j));
  comps.push_back(zn.scale(s.c));
  comps.push_back(zlast);
  for (std::size_t j = 0; j < n; ++j) comps.push_back((MultiPoly::z(vars, j) * zn).scale(s.s));
  comps.push_back((zn * zlast).scale(Rational(s.s * t.c)));
  for (std::size_t j = 0; j <= n; ++j) comps.push_back((MultiPoly::z(vars, j) * zn * zlast).scale(Rational(s.s * t.s)));
  return CRMap(n, 3 * n + 2, std::move(comps));
}

}  // namespace crspan
