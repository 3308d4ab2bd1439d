#pragma once

#include <map>
#include <string>
#include <vector>

#include "ainf/algebra.hpp"
#include "ainf/kunneth.hpp"
#include "ainf/linalg.hpp"
#include "ainf/qpoly.hpp"
#include "ainf/report.hpp"

namespace ainf {

struct ScalarCohomology {
  std::map<Degree, int> dims;
  /// Cocycles spanning a complement of the coboundaries, per degree.
  std::map<Degree, std::vector<std::vector<Scalar>>> representatives;
  int total() const;
};

/// Cohomology of a degree +1 differential on a graded space. Throws
/// std::invalid_argument if d^2 != 0 or d does not raise degree by one.
ScalarCohomology scalar_cohomology(const RationalMatrix& d, const std::vector<Degree>& grading);
/// Matrix of m_{1,0}, column j = m_{1,0}(basis j).
RationalMatrix mu1_matrix(const AInfAlgebra& alg);
ScalarCohomology mu1_cohomology(const AInfAlgebra& alg);

/// Dense matrix over Q[q].
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  QPoly& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const QPoly& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  bool is_zero() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<QPoly> data_;
};

/// Rank over the fraction field by fraction-free (Bareiss) elimination.
int poly_rank(PolyMatrix m);
/// Nonzero Smith invariant factors over Q[q], monic, in divisibility order.
std::vector<QPoly> smith_invariants(PolyMatrix m);

/// m^b_1 over q = T^{1/N}, N the least common denominator of all energies
/// involved. Refuses truncated algebras and non-bounding b; asserts (m^b_1)^2 = 0.
struct FloerMatrix {
  PolyMatrix differential;
  long denominator = 1;
};
FloerMatrix floer_matrix(const AInfAlgebra& alg, const AlgElement& b);

/// Dimension of HF(alg, b) over the Novikov field: dim V - 2 rank(m^b_1).
int hf_dimension(const AInfAlgebra& alg, const AlgElement& b);

struct Barcode {
  long denominator = 1;
  /// Lengths e/N of the monomial invariant factors q^e, ascending (zero-length bars included).
  std::vector<Scalar> bars;
  /// Invariant factors that are not monomials, verbatim.
  std::vector<std::string> non_monomial;
  int free_rank = 0;
  Json to_json() const;
};
Barcode barcode(const AInfAlgebra& alg, const AlgElement& b);

/// dim HF(C, iota_A b1 + iota_B b2) = dim HF(A, b1) * dim HF(B, b2). Throws if
/// the pair does not commute or the box product is not bounding.
Report check_hf_kunneth(const SubalgebraEmbedding& emb_a, const SubalgebraEmbedding& emb_b, const AlgElement& b1,
                        const AlgElement& b2);

}  // namespace ainf
