#include "crspan/rigidity.hpp"

#include <utility>

#include "crspan/error.hpp"

namespace crspan {

std::size_t partial_sum(std::size_t n, std::size_t k) { return (k + 1) * n - k * (k + 1) / 2; }

std::optional<std::size_t> minimal_level(std::size_t n, std::size_t value) {
  for (std::size_t k = 0; k < n; ++k)
    if (value < partial_sum(n, k)) return k;
  return std::nullopt;
}

bool codim_criterion(std::size_t n, std::size_t target_n) {
  if (target_n < n) throw Error(ErrorKind::kPrecondition, "codim_criterion needs N >= n");
  return 2 * (target_n - n) < n * (n + 1);
}

DefectReport defect(std::size_t n, std::size_t target_n, std::span<const std::size_t> dims) {
  if (n < 1) throw Error(ErrorKind::kMalformedProfile, "n must be >= 1");
  if (dims.empty() || dims.front() != 0) {
    throw Error(ErrorKind::kMalformedProfile, "profile must start with d_1 = 0");
  }
  for (std::size_t l = 1; l < dims.size(); ++l) {
    if (dims[l] < dims[l - 1]) throw Error(ErrorKind::kMalformedProfile, "profile must be nondecreasing");
  }

  DefectReport r;
  r.n = n;
  r.target_n = target_n;
  r.dims.assign(dims.begin(), dims.end());
  r.d = dims.back();
  r.codim_criterion_ok = target_n >= n && codim_criterion(n, target_n);

  bool all_exist = true;
  std::size_t k = 0;
  for (std::size_t l = 1; l < dims.size(); ++l) {
    const std::size_t inc = dims[l] - dims[l - 1];
    r.increments.push_back(inc);
    const auto kl = minimal_level(n, inc);
    r.k_per_level.push_back(kl);
    if (kl) {
      k += *kl;
    } else if (all_exist) {
      all_exist = false;
      r.reason = "increment d_" + std::to_string(l + 1) + " - d_" + std::to_string(l) + " = " +
                 std::to_string(inc) + " >= n(n+1)/2 = " + std::to_string(n * (n + 1) / 2);
    }
  }
  if (all_exist) {
    r.k = k;
    r.plane_bound = n + r.d + k + 1;
    if (k >= n) {
      r.reason = "k = " + std::to_string(k) + " is not < n = " + std::to_string(n);
    } else {
      r.hypothesis_ok = true;
    }
  }
  return r;
}

std::size_t image_span_dim(const CRMap& f) {
  std::vector<MultiPoly> nonconstant;
  nonconstant.reserve(f.components().size());
  const Monomial one(f.source_vars());
  for (const auto& c : f.components()) {
    MultiPoly p = c;
    p.add_term(one, -c.coefficient(one));
    nonconstant.push_back(std::move(p));
  }
  return rank(coefficient_matrix(nonconstant).matrix);
}

RigidityVerdict::RigidityVerdict(DefectReport defect, std::size_t image_span, std::vector<std::string> warnings)
    : defect_(std::move(defect)), image_span_(image_span), warnings_(std::move(warnings)) {}

bool RigidityVerdict::lower_bound_ok() const { return image_span_ >= defect_.n + defect_.d + 1; }

bool RigidityVerdict::upper_bound_ok() const {
  return defect_.plane_bound.has_value() && image_span_ <= *defect_.plane_bound;
}

bool RigidityVerdict::sharp() const {
  return defect_.plane_bound.has_value() && image_span_ == *defect_.plane_bound;
}

bool RigidityVerdict::invariant_violated() const {
  return !lower_bound_ok() || (defect_.hypothesis_ok && !upper_bound_ok());
}

Analysis analyze(const CRMap& f, std::size_t trials, std::uint64_t seed) {
  const SphereCheck check = check_sphere_map(f);
  if (!check.ok) {
    throw Error(ErrorKind::kSphereVerification,
                "map does not send S^n into S^N; remainder " + check.remainder.to_string());
  }
  GenericProfile gp = generic_profile(f, trials, seed);
  DefectReport rep = defect(f.n(), f.target_n(), gp.profile.dims);
  std::vector<std::string> warnings;
  if (gp.samples_disagree) warnings.emplace_back("sampled points produced different profiles; maximum taken");
  if (gp.transversal_samples < trials) {
    warnings.push_back(std::to_string(trials - gp.transversal_samples) + " sampled point(s) were non-transversal");
  }
  if (!rep.hypothesis_ok) warnings.push_back("hypothesis not satisfied: " + rep.reason);
  const std::size_t span = image_span_dim(f);
  return Analysis{std::move(gp), RigidityVerdict(std::move(rep), span, std::move(warnings))};
}

}  // namespace crspan
