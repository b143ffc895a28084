#pragma once

// JSON wire formats. Rationals are strings "p/q" or "p"; Gaussian rationals
// are {"re": ..., "im": ...}; polynomials are term lists
// [{"coeff": ..., "z": [...], "zeta": [...]}] with "zeta" optional.
// Parse failures throw Error(kParse).

#include <nlohmann/json.hpp>

#include "crspan/crmap.hpp"
#include "crspan/exact.hpp"
#include "crspan/identity.hpp"
#include "crspan/multipoly.hpp"
#include "crspan/rigidity.hpp"

namespace crspan::json {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json to_json(const GaussianRational& z);
GaussianRational gaussian_from_json(const json& j);

ordered_json to_json(const MultiPoly& p);
/// `vars` is used when the term list is empty.
MultiPoly poly_from_json(const json& j, std::size_t vars);

ordered_json to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const json& j);

ordered_json point_to_json(std::span<const GaussianRational> p);
Point point_from_json(const json& j);

ordered_json to_json(const CRMap& f);
CRMap crmap_from_json(const json& j);

ordered_json to_json(const DegeneracyProfile& p);

ordered_json to_json(const RigidityVerdict& v);
/// Restores the verdict fields from its serialization (flags are recomputed).
RigidityVerdict verdict_from_json(const json& j);

ordered_json to_json(const IdentityProblem& prob);
IdentityProblem identity_problem_from_json(const json& j);

ordered_json to_json(const SolutionPair& s);
ordered_json to_json(const SolutionSpace& s);
SolutionSpace solution_space_from_json(const json& j, std::size_t n);

ordered_json to_json(const BoundReport& r);
ordered_json to_json(const Decomposition& d);

}  // namespace crspan::json
