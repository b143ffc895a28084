#include "crspan/crmap.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <string>
#include <utility>

#include "crspan/error.hpp"

namespace crspan {

CRMap::CRMap(std::size_t n, std::size_t target_n, std::vector<MultiPoly> components)
    : n_(n), target_n_(target_n), components_(std::move(components)) {
  if (n_ < 1) throw Error(ErrorKind::kPrecondition, "source CR dimension n must be >= 1");
  if (target_n_ < n_) throw Error(ErrorKind::kPrecondition, "target dimension N must be >= n");
  if (components_.size() != target_n_ + 1) {
    throw Error(ErrorKind::kPrecondition, "expected N+1 = " + std::to_string(target_n_ + 1) +
                                              " components, got " + std::to_string(components_.size()));
  }
  for (std::size_t k = 0; k < components_.size(); ++k) {
    if (components_[k].vars() != n_ + 1) {
      throw Error(ErrorKind::kVariableMismatch,
                  "component " + std::to_string(k + 1) + " is not a polynomial in n+1 variables");
    }
    if (components_[k].has_zeta_support()) {
      throw Error(ErrorKind::kPrecondition,
                  "component " + std::to_string(k + 1) + " depends on conjugate variables");
    }
  }
}

CRMap linear_embedding(std::size_t n, std::size_t target_n) {
  std::vector<MultiPoly> comps;
  comps.reserve(target_n + 1);
  for (std::size_t k = 0; k <= target_n; ++k)
    comps.push_back(k <= n ? MultiPoly::z(n + 1, k) : MultiPoly(n + 1));
  return CRMap(n, target_n, std::move(comps));
}

CRMap compose_target(const ExactMatrix& u, const CRMap& f) {
  const std::size_t dim = f.target_n() + 1;
  if (u.rows() != dim || u.cols() != dim) {
    throw Error(ErrorKind::kVariableMismatch, "target transform must be (N+1)x(N+1)");
  }
  std::vector<MultiPoly> comps(dim, MultiPoly(f.source_vars()));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (!u(i, j).is_zero()) comps[i] += f.components()[j].scale(u(i, j));
  return CRMap(f.n(), f.target_n(), std::move(comps));
}

CRMap compose_source(const CRMap& f, const ExactMatrix& a) {
  const std::size_t vars = f.source_vars();
  if (a.rows() != vars || a.cols() != vars) {
    throw Error(ErrorKind::kVariableMismatch, "source transform must be (n+1)x(n+1)");
  }
  std::vector<MultiPoly> images(vars, MultiPoly(vars));
  for (std::size_t i = 0; i < vars; ++i)
    for (std::size_t j = 0; j < vars; ++j)
      if (!a(i, j).is_zero()) images[i] += MultiPoly::z(vars, j).scale(a(i, j));
  std::vector<MultiPoly> comps;
  comps.reserve(f.components().size());
  for (const auto& c : f.components()) comps.push_back(substitute_z(c, images));
  return CRMap(f.n(), f.target_n(), std::move(comps));
}

SphereCheck check_sphere_map(const CRMap& f) {
  const std::size_t vars = f.source_vars();
  MultiPoly h = MultiPoly::constant(vars, -1);
  for (const auto& c : f.components()) h += c * c.conjugate();
  const MultiPoly sphere = hermitian_square(vars) - MultiPoly::constant(vars, 1);
  Division div = reduce_mod(h, sphere);
  SphereCheck out;
  out.ok = div.remainder.is_zero();
  out.remainder = std::move(div.remainder);
  return out;
}

bool verify_sphere_map(const CRMap& f) { return check_sphere_map(f).ok; }

std::vector<CRVectorField> standard_cr_fields(std::size_t n) {
  if (n < 1) throw Error(ErrorKind::kPrecondition, "standard_cr_fields needs n >= 1");
  const std::size_t vars = n + 1;
  std::vector<CRVectorField> fields;
  fields.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    CRVectorField field{std::vector<MultiPoly>(vars, MultiPoly(vars))};
    field.coefficients[a] = MultiPoly::zeta(vars, n);
    field.coefficients[n] = -MultiPoly::zeta(vars, a);
    fields.push_back(std::move(field));
  }
  return fields;
}

std::vector<MultiPoly> apply_field(const CRVectorField& field, std::span<const MultiPoly> v) {
  const std::size_t vars = field.coefficients.size();
  std::vector<MultiPoly> out;
  out.reserve(v.size());
  for (const auto& comp : v) {
    if (comp.vars() != vars) throw Error(ErrorKind::kVariableMismatch, "field/polynomial dimension mismatch");
    MultiPoly acc(vars);
    for (std::size_t j = 0; j < vars; ++j) {
      if (field.coefficients[j].is_zero()) continue;
      MultiPoly d = comp.partial_derivative(j, VarKind::kZ);
      if (!d.is_zero()) acc += field.coefficients[j] * d;
    }
    out.push_back(std::move(acc));
  }
  return out;
}

namespace {

void check_base_point(const CRMap& f, std::span<const GaussianRational> p) {
  if (p.size() != f.source_vars()) {
    throw Error(ErrorKind::kVariableMismatch, "base point must have n+1 coordinates");
  }
  Rational norm = 0;
  for (const auto& x : p) norm += x.norm2();
  if (norm != 1) {
    throw Error(ErrorKind::kOffSphere, "base point is not on the unit sphere (|p|^2 = " + to_string(norm) + ")");
  }
  if (p.back().is_zero()) {
    throw Error(ErrorKind::kDegenerateBasePoint, "base point has vanishing last coordinate");
  }
}

// Builds E_1(p) subset E_2(p) subset ... one level at a time. Level s holds
// L^J f for |J| = s, enumerated as nondecreasing field sequences.
class JetTower {
 public:
  JetTower(const CRMap& f, std::span<const GaussianRational> p)
      : f_(f), point_(p.begin(), p.end()), fields_(standard_cr_fields(f.n())) {
    check_base_point(f, p);
    frontier_.push_back({f.components(), 0});
    push_row(f.components());
  }

  /// Adds level `level_ + 1` and returns dim E_{level}(p).
  std::size_t next() {
    std::vector<Node> grown;
    for (const Node& node : frontier_) {
      for (std::size_t a = node.min_field; a < fields_.size(); ++a) {
        std::vector<MultiPoly> v = apply_field(fields_[a], node.values);
        push_row(v);
        grown.push_back({std::move(v), a});
      }
    }
    frontier_ = std::move(grown);
    ++level_;
    return rank(ExactMatrix::from_rows(rows_, f_.target_n() + 1));
  }

  std::size_t level() const { return level_; }

 private:
  struct Node {
    std::vector<MultiPoly> values;
    std::size_t min_field;
  };

  void push_row(const std::vector<MultiPoly>& values) {
    ExactVector row;
    row.reserve(values.size());
    for (const auto& v : values) row.push_back(v.evaluate(point_));
    rows_.push_back(std::move(row));
  }

  const CRMap& f_;
  Point point_;
  std::vector<CRVectorField> fields_;
  std::vector<Node> frontier_;
  std::vector<ExactVector> rows_;
  std::size_t level_ = 0;
};

}  // namespace

std::vector<std::size_t> jet_span_dims(const CRMap& f, std::span<const GaussianRational> p,
                                       std::size_t max_level) {
  JetTower tower(f, p);
  std::vector<std::size_t> dims;
  dims.reserve(max_level);
  for (std::size_t l = 1; l <= max_level; ++l) dims.push_back(tower.next());
  return dims;
}

std::size_t jet_span_dim(const CRMap& f, std::span<const GaussianRational> p, std::size_t level) {
  if (level == 0) {
    check_base_point(f, p);
    ExactVector row;
    for (const auto& c : f.components()) row.push_back(c.evaluate(p));
    return rank(ExactMatrix::from_rows(std::span<const ExactVector>(&row, 1), row.size()));
  }
  return jet_span_dims(f, p, level).back();
}

DegeneracyProfile degeneracy_profile(const CRMap& f, std::span<const GaussianRational> p) {
  JetTower tower(f, p);
  const std::size_t n = f.n();
  const std::size_t e1 = tower.next();
  if (e1 != n + 1) {
    throw Error(ErrorKind::kNonTransversal,
                "dim E_1(p) = " + std::to_string(e1) + ", expected n+1 = " + std::to_string(n + 1));
  }
  DegeneracyProfile out;
  out.base_point.assign(p.begin(), p.end());
  out.transversal = true;
  out.dims.push_back(0);
  // d_l is bounded by N - n, so the chain must stall.
  for (;;) {
    const std::size_t d = tower.next() - (n + 1);
    if (d == out.dims.back()) break;
    out.dims.push_back(d);
  }
  out.l0 = out.dims.size();
  if (out.d() > f.target_n() - n) {
    throw Error(ErrorKind::kInvariantViolation, "degeneracy rank exceeds N - n");
  }
  for (std::size_t l = 2; l < out.dims.size(); ++l)
    if (out.dims[l] <= out.dims[l - 1]) out.strictly_increasing = false;
  return out;
}

Point sample_sphere_point(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t real_dim = 2 * n + 1;
  for (;;) {
    std::vector<Rational> x(real_dim);
    Rational s = 0;
    for (auto& xi : x) {
      long num = static_cast<long>(rng() % 9) + 1;
      if (rng() & 1u) num = -num;
      const long den = static_cast<long>(rng() % 9) + 1;
      xi = Rational(num, den);
      xi.canonicalize();
      s += xi * xi;
    }
    // Inverse stereographic projection R^{2n+1} -> S^{2n+1} subset R^{2n+2}.
    const Rational denom = s + 1;
    std::vector<Rational> y(real_dim + 1);
    for (std::size_t i = 0; i < real_dim; ++i) y[i] = 2 * x[i] / denom;
    y[real_dim] = (s - 1) / denom;
    Point p;
    p.reserve(n + 1);
    for (std::size_t j = 0; j <= n; ++j) p.emplace_back(y[2 * j], y[2 * j + 1]);
    if (!p.back().is_zero()) return p;
  }
}

GenericProfile generic_profile(const CRMap& f, std::size_t trials, std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorKind::kPrecondition, "generic_profile needs trials >= 1");
  std::vector<std::future<std::optional<DegeneracyProfile>>> jobs;
  jobs.reserve(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    jobs.push_back(std::async(std::launch::async, [&f, n = f.n(), s = seed + i]() -> std::optional<DegeneracyProfile> {
      const Point p = sample_sphere_point(n, s);
      try {
        return degeneracy_profile(f, p);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::kNonTransversal) return std::nullopt;
        throw;
      }
    }));
  }
  GenericProfile out;
  std::optional<DegeneracyProfile> best;
  for (auto& job : jobs) {
    std::optional<DegeneracyProfile> prof = job.get();
    if (!prof) continue;
    ++out.transversal_samples;
    if (!best) {
      best = std::move(prof);
      continue;
    }
    if (prof->dims != best->dims) out.samples_disagree = true;
    if (std::lexicographical_compare(best->dims.begin(), best->dims.end(), prof->dims.begin(),
                                     prof->dims.end())) {
      best = std::move(prof);
    }
  }
  if (!best) {
    throw Error(ErrorKind::kNonTransversal, "no sampled point is transversal; the map is not an embedding");
  }
  out.profile = std::move(*best);
  return out;
}

}  // namespace crspan
