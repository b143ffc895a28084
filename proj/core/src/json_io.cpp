#include "crspan/json_io.hpp"

#include <string>
#include <utility>

#include "crspan/error.hpp"

namespace crspan::json {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::kParse, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t count_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    fail(std::string("field '") + key + "' must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  fail("rational must be a string \"p/q\" or an integer");
}

std::vector<std::uint32_t> exponents_from_json(const json& j) {
  if (!j.is_array()) fail("exponent list must be an array");
  std::vector<std::uint32_t> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number_integer() || e.get<long long>() < 0) fail("exponents must be nonnegative integers");
    out.push_back(e.get<std::uint32_t>());
  }
  return out;
}

ordered_json optional_count(const std::optional<std::size_t>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

}  // namespace

ordered_json to_json(const GaussianRational& z) {
  ordered_json j;
  j["re"] = to_string(z.re());
  j["im"] = to_string(z.im());
  return j;
}

GaussianRational gaussian_from_json(const json& j) {
  if (j.is_object()) {
    const Rational re = j.contains("re") ? rational_from_json(j.at("re")) : Rational(0);
    const Rational im = j.contains("im") ? rational_from_json(j.at("im")) : Rational(0);
    return {re, im};
  }
  return GaussianRational(rational_from_json(j));
}

ordered_json to_json(const MultiPoly& p) {
  ordered_json terms = ordered_json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    ordered_json t;
    t["coeff"] = to_json(it->second);
    t["z"] = it->first.z_exponents();
    if (it->first.has_zeta()) t["zeta"] = it->first.zeta_exponents();
    terms.push_back(std::move(t));
  }
  return terms;
}

MultiPoly poly_from_json(const json& j, std::size_t vars) {
  if (!j.is_array()) fail("polynomial must be an array of terms");
  MultiPoly p(vars);
  for (const auto& t : j) {
    auto z = exponents_from_json(field(t, "z"));
    auto zeta = t.contains("zeta") ? exponents_from_json(t.at("zeta")) : std::vector<std::uint32_t>{};
    if (z.size() != vars) {
      fail("term has " + std::to_string(z.size()) + " z exponents, expected " + std::to_string(vars));
    }
    if (!zeta.empty() && zeta.size() != vars) fail("zeta exponent list has the wrong length");
    p.add_term(Monomial(std::move(z), std::move(zeta)), gaussian_from_json(field(t, "coeff")));
  }
  return p;
}

ordered_json to_json(const ExactMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ExactMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) fail("matrix must be an array of rows");
  std::vector<ExactVector> rows;
  std::size_t cols = j.empty() ? 0 : j.front().size();
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) fail("matrix rows must be arrays of equal length");
    ExactVector v;
    for (const auto& e : row) v.push_back(gaussian_from_json(e));
    rows.push_back(std::move(v));
  }
  return ExactMatrix::from_rows(rows, cols);
}

ordered_json point_to_json(std::span<const GaussianRational> p) {
  ordered_json a = ordered_json::array();
  for (const auto& x : p) a.push_back(to_json(x));
  return a;
}

Point point_from_json(const json& j) {
  if (!j.is_array()) fail("point must be an array");
  Point p;
  for (const auto& x : j) p.push_back(gaussian_from_json(x));
  return p;
}

ordered_json to_json(const CRMap& f) {
  ordered_json j;
  j["n"] = f.n();
  j["N"] = f.target_n();
  ordered_json comps = ordered_json::array();
  for (const auto& c : f.components()) comps.push_back(to_json(c));
  j["components"] = std::move(comps);
  return j;
}

CRMap crmap_from_json(const json& j) {
  const std::size_t n = count_field(j, "n");
  const std::size_t target_n = count_field(j, "N");
  const json& comps = field(j, "components");
  if (!comps.is_array()) fail("'components' must be an array");
  std::vector<MultiPoly> polys;
  for (const auto& c : comps) polys.push_back(poly_from_json(c, n + 1));
  try {
    return CRMap(n, target_n, std::move(polys));
  } catch (const Error& e) {
    fail(std::string("invalid map: ") + e.what());
  }
}

ordered_json to_json(const DegeneracyProfile& p) {
  ordered_json j;
  j["base_point"] = point_to_json(p.base_point);
  j["dims"] = p.dims;
  j["l0"] = p.l0;
  j["transversal"] = p.transversal;
  j["strictly_increasing"] = p.strictly_increasing;
  return j;
}

ordered_json to_json(const RigidityVerdict& v) {
  const DefectReport& d = v.defect();
  ordered_json j;
  j["n"] = d.n;
  j["N"] = d.target_n;
  j["dims"] = d.dims;
  j["l0"] = d.dims.size();
  j["increments"] = d.increments;
  ordered_json kl = ordered_json::array();
  for (const auto& k : d.k_per_level) kl.push_back(optional_count(k));
  j["k_per_level"] = std::move(kl);
  j["k"] = optional_count(d.k);
  j["d"] = d.d;
  j["plane_bound"] = optional_count(d.plane_bound);
  j["image_span"] = v.image_span();
  j["hypothesis_ok"] = d.hypothesis_ok;
  j["codim_criterion_ok"] = d.codim_criterion_ok;
  j["lower_bound_ok"] = v.lower_bound_ok();
  j["upper_bound_ok"] = v.upper_bound_ok();
  j["sharp"] = v.sharp();
  j["reason"] = d.reason;
  j["warnings"] = v.warnings();
  return j;
}

RigidityVerdict verdict_from_json(const json& j) {
  const std::size_t n = count_field(j, "n");
  const std::size_t target_n = count_field(j, "N");
  const auto dims = field(j, "dims").get<std::vector<std::size_t>>();
  DefectReport rep = defect(n, target_n, dims);
  std::vector<std::string> warnings;
  if (j.contains("warnings")) warnings = j.at("warnings").get<std::vector<std::string>>();
  return RigidityVerdict(std::move(rep), count_field(j, "image_span"), std::move(warnings));
}

ordered_json to_json(const IdentityProblem& prob) {
  ordered_json j;
  j["n"] = prob.n();
  j["degree"] = prob.degree();
  ordered_json p = ordered_json::array();
  for (const auto& pj : prob.p()) p.push_back(to_json(pj));
  j["p"] = std::move(p);
  return j;
}

IdentityProblem identity_problem_from_json(const json& j) {
  const std::size_t n = count_field(j, "n");
  const auto degree = static_cast<std::uint32_t>(count_field(j, "degree"));
  const json& p = field(j, "p");
  if (!p.is_array()) fail("'p' must be an array of polynomials");
  std::vector<MultiPoly> polys;
  for (const auto& pj : p) polys.push_back(poly_from_json(pj, n));
  return IdentityProblem(n, degree, std::move(polys));
}

ordered_json to_json(const SolutionPair& s) {
  ordered_json j;
  j["Q"] = to_json(s.q);
  j["r"] = to_json(s.r);
  return j;
}

ordered_json to_json(const SolutionSpace& s) {
  ordered_json j;
  j["dim"] = s.dim;
  ordered_json basis = ordered_json::array();
  for (const auto& b : s.basis) basis.push_back(to_json(b));
  j["basis"] = std::move(basis);
  return j;
}

SolutionSpace solution_space_from_json(const json& j, std::size_t n) {
  SolutionSpace s;
  s.dim = count_field(j, "dim");
  for (const auto& b : field(j, "basis")) {
    s.basis.push_back({matrix_from_json(field(b, "Q")), poly_from_json(field(b, "r"), n)});
  }
  if (s.basis.size() != s.dim) fail("solution space 'dim' disagrees with basis size");
  return s;
}

ordered_json to_json(const BoundReport& r) {
  ordered_json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["bound"] = optional_count(r.bound);
  j["dim"] = r.dim;
  j["violation"] = r.violation;
  j["tight"] = r.tight;
  return j;
}

ordered_json to_json(const Decomposition& d) {
  ordered_json j;
  j["kappa"] = d.kernel_basis.size();
  ordered_json v = ordered_json::array();
  for (const auto& vec : d.kernel_basis) v.push_back(point_to_json(vec));
  j["kernel_basis"] = std::move(v);
  ordered_json h = ordered_json::array();
  for (const auto& hj : d.h) h.push_back(to_json(hj));
  j["h"] = std::move(h);
  ordered_json s = ordered_json::array();
  for (const auto& si : d.s) {
    ordered_json row = ordered_json::array();
    for (const auto& sa : si) row.push_back(to_json(sa));
    s.push_back(std::move(row));
  }
  j["s"] = std::move(s);
  ordered_json r = ordered_json::array();
  for (const auto& ri : d.r) r.push_back(to_json(ri));
  j["r"] = std::move(r);
  return j;
}

}  // namespace crspan::json
