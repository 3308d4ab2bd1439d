#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ainf/ainf_checks.hpp"
#include "ainf/algebra.hpp"
#include "ainf/report.hpp"

namespace ainf {

/// Degree-0 linear map from a source algebra into a target algebra, given by
/// the image of each source basis element.
struct SubalgebraEmbedding {
  std::string name;
  AInfAlgebra source;
  AInfAlgebra target;
  std::vector<Combination<Scalar>> images;

  /// Validates sizes, index ranges and degree preservation; throws
  /// std::invalid_argument otherwise.
  void validate() const;
  Combination<Scalar> apply(const Combination<Scalar>& x) const;
  AlgElement apply(const AlgElement& x) const;
  /// Same embedding into a different target with the same basis.
  SubalgebraEmbedding with_target(AInfAlgebra new_target) const;
};

/// Def-2.5 subalgebra check: injectivity, unit, monoid inclusion and
/// mu_{k,beta}(iota a...) = iota(m^A_{k,beta}(a...)) for beta in G_A, 0 otherwise.
Report check_subalgebra(const SubalgebraEmbedding& emb);

/// K(a (x) b) = (-1)^{|a|} mu_{2,0}(iota a, iota b) on basis elements.
Combination<Scalar> kunneth_K(const SubalgebraEmbedding& emb_a, const SubalgebraEmbedding& emb_b, int a, int b);
/// Bilinear extension of K.
Combination<Scalar> kunneth_K(const SubalgebraEmbedding& emb_a, const SubalgebraEmbedding& emb_b,
                              const Combination<Scalar>& a, const Combination<Scalar>& b);

/// Commuting-subalgebra check: both subalgebra checks, the monoid sum
/// condition, and clauses (a), (b), (c) over all tagged basis tuples and all
/// relevant beta. At k = 0 the insertion clause is the sum of both branches.
Report check_commuting(const SubalgebraEmbedding& emb_a, const SubalgebraEmbedding& emb_b);

struct BoxProduct {
  AlgElement element;
  McDefect defect_a;
  McDefect defect_b;
  McDefect defect_c;
  Report report;  // remainder-zero and additivity checks
};

/// iota_A(b1) + iota_B(b2), validated by a direct Maurer-Cartan computation in
/// the target: zero remainder and P(b1 box b2) = P(b1) + P(b2).
BoxProduct box_product(const SubalgebraEmbedding& emb_a, const SubalgebraEmbedding& emb_b, const AlgElement& b1,
                       const AlgElement& b2, const std::optional<Scalar>& cutoff = std::nullopt);

/// Hypothesis of the quasi-isomorphism criterion at beta = 0: K injective,
/// K maps cycles to cycles and boundaries to boundaries, and the induced map on
/// cohomology is bijective. The tensor differential is
/// d(a (x) b) = m^A_{1,0} a (x) b + (-1)^{|a|} a (x) m^B_{1,0} b, the one K intertwines
/// whenever the insertion clause holds at (k, beta) = (0, 0). Throws if it squares
/// to nonzero.
Report check_kunneth_hypothesis(const SubalgebraEmbedding& emb_a, const SubalgebraEmbedding& emb_b);

}  // namespace ainf
