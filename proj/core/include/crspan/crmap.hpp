#pragma once

// Polynomial CR maps S^n -> S^N, tangential (1,0) fields on the source
// sphere, and the jet spans E_l(p) with their degeneracy ranks d_l(p).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "crspan/exact.hpp"
#include "crspan/multipoly.hpp"

namespace crspan {

using Point = std::vector<GaussianRational>;

/// f = (f_1, ..., f_{N+1}) : C^{n+1} -> C^{N+1}, holomorphic polynomial
/// components in n+1 variables.
class CRMap {
 public:
  /// Validates N >= n >= 1, N+1 components, n+1 variables, no zeta support.
  CRMap(std::size_t n, std::size_t target_n, std::vector<MultiPoly> components);

  std::size_t n() const noexcept { return n_; }
  std::size_t target_n() const noexcept { return target_n_; }
  std::size_t source_vars() const noexcept { return n_ + 1; }
  const std::vector<MultiPoly>& components() const noexcept { return components_; }

  friend bool operator==(const CRMap&, const CRMap&) = default;

 private:
  std::size_t n_;
  std::size_t target_n_;
  std::vector<MultiPoly> components_;
};

/// Linear embedding z -> (z, 0, ..., 0) into C^{N+1}.
CRMap linear_embedding(std::size_t n, std::size_t target_n);

/// U o f for an (N+1)x(N+1) matrix U.
CRMap compose_target(const ExactMatrix& u, const CRMap& f);

/// Substitutes z -> A z (A is (n+1)x(n+1)).
CRMap compose_source(const CRMap& f, const ExactMatrix& a);

struct SphereCheck {
  bool ok = false;
  /// Normal form of sum_k f_k * conj(f_k) - 1 modulo sum_j z_j zeta_j - 1.
  MultiPoly remainder;
};

SphereCheck check_sphere_map(const CRMap& f);
bool verify_sphere_map(const CRMap& f);

/// Coefficients c_j of sum_j c_j d/dz_j.
struct CRVectorField {
  std::vector<MultiPoly> coefficients;
};

/// L_a = zeta_{n+1} d/dz_a - zeta_a d/dz_{n+1}, a = 1..n.
std::vector<CRVectorField> standard_cr_fields(std::size_t n);

/// Componentwise sum_j c_j * dv/dz_j.
std::vector<MultiPoly> apply_field(const CRVectorField& field, std::span<const MultiPoly> v);

/// dim E_l(p) for every l = 1..max_level (index l-1). Validates p.
std::vector<std::size_t> jet_span_dims(const CRMap& f, std::span<const GaussianRational> p,
                                       std::size_t max_level);
std::size_t jet_span_dim(const CRMap& f, std::span<const GaussianRational> p, std::size_t level);

struct DegeneracyProfile {
  Point base_point;
  /// d_1 = 0, d_2, ..., d_{l_0}.
  std::vector<std::size_t> dims;
  std::size_t l0 = 1;
  bool transversal = false;
  bool strictly_increasing = true;

  std::size_t d() const { return dims.back(); }
};

DegeneracyProfile degeneracy_profile(const CRMap& f, std::span<const GaussianRational> p);

/// Deterministic rational point on S^n with nonzero last coordinate, from
/// inverse stereographic projection of a seeded rational vector in R^{2n+1}.
Point sample_sphere_point(std::size_t n, std::uint64_t seed);

struct GenericProfile {
  DegeneracyProfile profile;
  /// Number of sampled points that were transversal.
  std::size_t transversal_samples = 0;
  /// Set when two transversal samples produced different profiles.
  bool samples_disagree = false;
};

/// Maximum profile (lexicographic in d_2, d_3, ...) over `trials` points
/// sample_sphere_point(n, seed + i). Points are processed concurrently.
GenericProfile generic_profile(const CRMap& f, std::size_t trials, std::uint64_t seed);

}  // namespace crspan
