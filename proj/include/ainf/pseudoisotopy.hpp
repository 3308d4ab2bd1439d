#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ainf/algebra.hpp"
#include "ainf/kunneth.hpp"
#include "ainf/report.hpp"
#include "ainf/tpoly.hpp"

namespace ainf {

using IsoConstant = StructureConstant<TPoly>;

/// A family (m^t, c^t) of operations with coefficients polynomial in t, for a
/// parity n. m^t has degree 2 - k - mu(beta), c^t has degree 1 - k - mu(beta).
/// Construction validates shape, degrees, monoid membership and the cutoff; the
/// isotopy invariants are left to check_pseudoisotopy.
class Pseudoisotopy {
 public:
  Pseudoisotopy(std::string name, GradedBasis basis, EnergyMonoid monoid, std::optional<Scalar> cutoff,
                std::optional<int> unit, int parity, std::vector<IsoConstant> m, std::vector<IsoConstant> c);

  /// m^t = alg for all t, c^t = 0.
  static Pseudoisotopy constant(const AInfAlgebra& alg, int parity, const std::string& name = {});

  const std::string& name() const { return name_; }
  const GradedBasis& basis() const { return basis_; }
  const EnergyMonoid& monoid() const { return monoid_; }
  const std::optional<Scalar>& cutoff() const { return cutoff_; }
  const std::optional<int>& unit() const { return unit_; }
  int parity() const { return parity_; }
  const std::vector<IsoConstant>& m_constants() const { return m_; }
  const std::vector<IsoConstant>& c_constants() const { return c_; }
  const BetaSet& betas() const { return betas_; }
  const OpTable<TPoly>& m_table() const { return m_table_; }
  const OpTable<TPoly>& c_table() const { return c_table_; }
  int dim() const { return basis_.size(); }

  /// m^t at a fixed t as an algebra (same basis, monoid, cutoff and unit).
  AInfAlgebra at(const Scalar& t, const std::string& name = {}) const;

  /// Endpoint algebras m(0) and m(1) the family is claimed to connect.
  const std::optional<AInfAlgebra>& start() const { return start_; }
  const std::optional<AInfAlgebra>& end() const { return end_; }
  Pseudoisotopy with_endpoints(AInfAlgebra start, AInfAlgebra end) const;
  Pseudoisotopy with_constants(std::vector<IsoConstant> m, std::vector<IsoConstant> c) const;
  /// Negates the constant with the given id ("NAME.m#i" or "NAME.c#i").
  Pseudoisotopy with_flipped(const std::string& id) const;

 private:
  std::string name_;
  GradedBasis basis_;
  EnergyMonoid monoid_;
  std::optional<Scalar> cutoff_;
  std::optional<int> unit_;
  int parity_;
  std::vector<IsoConstant> m_;
  std::vector<IsoConstant> c_;
  BetaSet betas_;
  OpTable<TPoly> m_table_;
  OpTable<TPoly> c_table_;
  std::optional<AInfAlgebra> start_;
  std::optional<AInfAlgebra> end_;
};

/// Same operations (ignoring names and ids), basis, cutoff and unit.
bool same_operations(const AInfAlgebra& a, const AInfAlgebra& b);

struct IsotopyCheckOptions {
  /// Replace (-1)^{n+1} in the isotopy equation by 1 (mutation harness).
  bool drop_parity_factor = false;
};

/// Checks t-independence of m_{k,0}, vanishing of c_{k,0} and of c with a unit
/// input, the A-infinity relations of m^t as polynomial identities, the isotopy
/// equation
///   (-1)^{n+1} d/dt m^t = sum m^t(.., c^t(..), ..) - sum (-1)^{sum_{l<i} ||x_l||} c^t(.., m^t(..), ..)
/// coefficientwise, and the endpoints when they are set.
Report check_pseudoisotopy(const Pseudoisotopy& p, const IsotopyCheckOptions& opts = {});

/// The isotopy equation defect at one (beta, tuple); zero iff it holds there.
Combination<TPoly> isotopy_defect(const Pseudoisotopy& p, const MonoidElement& beta, const std::vector<int>& tuple,
                                  const IsotopyCheckOptions& opts = {});

/// Integrates the isotopy equation backwards from m(1) = m_end with the given
/// c^t: levels are processed by increasing energy and
///   m^tau_beta = m_end_beta + (-1)^n int_tau^1 sum m(c) + (-1)^{n+1} int_tau^1 sum (-1)^{..} c(m).
/// m_end must be truncated; the result carries endpoints (m^0, m_end).
Pseudoisotopy solve_isotopy_from_end(const AInfAlgebra& m_end, const std::vector<IsoConstant>& c, int parity,
                                     const std::string& name = {});

struct Extension {
  AInfAlgebra algebra;    // m0 extended modulo T^{E1}
  Pseudoisotopy isotopy;  // between the extension and m1, modulo T^{E1}
};

/// One step of the extension theorem: c := 0 at the new level and m^tau by the
/// integral formula, with the new level's beta fixed by m1 and by compositions
/// of lower levels. Throws if the monoid has energies strictly between E0 and E1
/// or the isotopy does not connect m0 to m1 modulo T^{E0}.
Extension extend_one_level(const AInfAlgebra& m0, const AInfAlgebra& m1, const Pseudoisotopy& p);

/// Iterates extend_one_level over every energy level of the targets. targets[i]
/// is an algebra modulo T^{E_{i+1}}; consecutive targets must agree modulo the
/// smaller cutoff (composing isotopies between different targets is not
/// available). p connects m0 and targets[0] modulo T^{E0}.
Extension extend_to(const AInfAlgebra& m0, const std::vector<AInfAlgebra>& targets, const Pseudoisotopy& p);

struct CommutingIsotopyOptions {
  /// Omit the (-1)^{n2} twist on the A-side homotopy clauses (mutation harness).
  bool drop_n2_twist = false;
};

/// Commuting-isotopy relations for isotopies PA, PB on the factors and PC on the
/// target with parities n1, n2, n1 + n2: vanishing at beta outside G_A and G_B,
/// vanishing of pure tuples from the other factor, and on each side
///   m(iota a..) = iota m^A,  c(iota a..) = (-1)^{n2} iota c^A,
/// with the matching insertion identities for K(a (x) b); the B side carries
/// (-1)^{n1}. All identities are checked as polynomials in t.
Report check_commuting_isotopy(const Pseudoisotopy& pc, const Pseudoisotopy& pa, const Pseudoisotopy& pb,
                               const SubalgebraEmbedding& emb_a, const SubalgebraEmbedding& emb_b, int n1, int n2,
                               const CommutingIsotopyOptions& opts = {});

struct ProductIsotopy {
  Pseudoisotopy pc;
  Pseudoisotopy pb;
  SubalgebraEmbedding emb_a;  // into pc.at(0)
  SubalgebraEmbedding emb_b;
};

/// PA (x) B for a graded-commutative DGA B held constant: m^{C,t} is the product
/// construction applied to m^{A,t}, c^{C,t} = (-1)^{n2} lift of c^{A,t}.
ProductIsotopy tensor_isotopy_with_commutative(const Pseudoisotopy& pa, const AInfAlgebra& b, int n2,
                                               const std::string& name = {});

}  // namespace ainf
