#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ainf/algebra.hpp"
#include "ainf/relations.hpp"
#include "ainf/report.hpp"

namespace ainf {

Json location_json(const GradedBasis& basis, const MonoidElement& beta, int n, std::span<const int> tuple);

/// Left-hand side of the A-infinity relation at (beta, tuple); zero iff the
/// relation holds on this instance.
Combination<Scalar> ainf_defect(const AInfAlgebra& alg, const MonoidElement& beta, std::span<const int> tuple);

/// Relation targets: every beta1 + beta2 of stored betas, with energy at most the
/// cutoff in truncated mode.
std::vector<MonoidElement> relation_targets(const BetaSet& betas, const std::optional<Scalar>& cutoff);

/// Exhaustive A-infinity relation check. The arity bound n <= 2*maxArity - 1
/// is exact: for larger n every term contains an operation of arity > maxArity.
Report check_ainf(const AInfAlgebra& alg, const CheckOptions& opts = {});

/// Priority input blocks for locating a flipped constant quickly.
CheckOptions mutation_options(const AInfAlgebra& alg, const std::string& constant_id);

/// Unit axioms: m_{2,0}(e,a) = a, (-1)^{|a|} m_{2,0}(a,e) = a and
/// m_{k,beta}(..., e, ...) = 0 for (k, beta) != (2, 0).
Report check_unit(const AInfAlgebra& alg);

/// The algebra with the (-1)^{|a|} twist removed from m_{2,0}(a, e) for odd a:
/// for the named element only, or for every odd element when `element` is empty.
AInfAlgebra drop_unit_twist(const AInfAlgebra& alg, const std::string& element = {});

/// Validates a bounding-cochain candidate: homogeneous of odd degree with every
/// coefficient of strictly positive valuation. Returns the degree (1 for b = 0).
/// Throws std::invalid_argument otherwise.
Degree validate_bounding_candidate(const AInfAlgebra& alg, const AlgElement& b);

/// The deformed structure m^b_k(a_1..a_k) = sum m_{k+i}(b^{i_0}, a_1, b^{i_1}, ..., a_k, b^{i_k}).
/// Each term with total b-energy lambda is stored at beta' = (E(beta) + lambda,
/// mu(beta) + i(1 - |b|)), so the result is again a gapped algebra over the
/// monoid G + <(lambda_j, 1 - |b|)>. The effective cutoff is the smaller of the
/// algebra's and the caller's; without either the result is exact.
AInfAlgebra deform(const AInfAlgebra& alg, const AlgElement& b, const std::optional<Scalar>& cutoff = std::nullopt);

struct McDefect {
  NovikovElement potential;  // coefficient of the unit
  AlgElement remainder;      // everything else; zero iff b is bounding
};

/// sum_k m_k(b, ..., b) modulo T^E (exact without a cutoff), split into the
/// unit component and the remainder. Requires a unit.
McDefect mc_defect(const AInfAlgebra& alg, const AlgElement& b, const std::optional<Scalar>& cutoff = std::nullopt);

/// Matrix of the assembled deformed differential m^b_1 over the Novikov ring,
/// column j = m^b_1(basis j).
std::vector<AlgElement> deformed_differential(const AInfAlgebra& alg, const AlgElement& b,
                                              const std::optional<Scalar>& cutoff = std::nullopt);

}  // namespace ainf
