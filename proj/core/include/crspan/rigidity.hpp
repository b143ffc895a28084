#pragma once

// Defect integers k_l, the plane bound n + d + k + 1, and the affine hull
// of the image of a polynomial sphere map.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crspan/crmap.hpp"

namespace crspan {

/// sum_{j=0}^{k} (n - j) = (k+1) n - k(k+1)/2.
std::size_t partial_sum(std::size_t n, std::size_t k);

/// Smallest k in 0..n-1 with value < partial_sum(n, k); nullopt if
/// value >= n(n+1)/2.
std::optional<std::size_t> minimal_level(std::size_t n, std::size_t value);

struct DefectReport {
  std::size_t n = 0;
  std::size_t target_n = 0;
  std::vector<std::size_t> dims;
  /// d_l - d_{l-1} for l = 2..l_0.
  std::vector<std::size_t> increments;
  /// k_l for l = 2..l_0; nullopt where no admissible k_l exists.
  std::vector<std::optional<std::size_t>> k_per_level;
  /// Present only when every k_l exists.
  std::optional<std::size_t> k;
  std::size_t d = 0;
  std::optional<std::size_t> plane_bound;
  bool hypothesis_ok = false;
  bool codim_criterion_ok = false;
  /// Which condition failed, empty when hypothesis_ok.
  std::string reason;
};

/// Throws Error(kMalformedProfile) unless dims starts at 0 and never
/// decreases.
DefectReport defect(std::size_t n, std::size_t target_n, std::span<const std::size_t> dims);

/// N - n < n(n+1)/2.
bool codim_criterion(std::size_t n, std::size_t target_n);

/// Dimension of the affine hull of the image: rank of the coefficient block
/// of the components over all nonconstant monomials.
std::size_t image_span_dim(const CRMap& f);

class RigidityVerdict {
 public:
  RigidityVerdict(DefectReport defect, std::size_t image_span, std::vector<std::string> warnings = {});

  const DefectReport& defect() const noexcept { return defect_; }
  std::size_t image_span() const noexcept { return image_span_; }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  /// image_span >= n + d + 1 (the map is not in a smaller plane).
  bool lower_bound_ok() const;
  /// image_span <= plane_bound; false when the bound is undefined.
  bool upper_bound_ok() const;
  /// image_span == plane_bound.
  bool sharp() const;
  /// A computed fact contradicts a proven bound.
  bool invariant_violated() const;

 private:
  DefectReport defect_;
  std::size_t image_span_;
  std::vector<std::string> warnings_;
};

struct Analysis {
  GenericProfile profile;
  RigidityVerdict verdict;
};

/// verify_sphere_map -> generic_profile -> defect -> image_span_dim.
/// Throws Error(kSphereVerification) when f does not map S^n into S^N.
Analysis analyze(const CRMap& f, std::size_t trials, std::uint64_t seed);

}  // namespace crspan
