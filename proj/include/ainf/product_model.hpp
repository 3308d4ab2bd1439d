#pragma once

#include <map>
#include <tuple>

#include "ainf/algebra.hpp"
#include "ainf/relations.hpp"
#include "ainf/kunneth.hpp"

namespace ainf {

struct ProductModel {
  AInfAlgebra algebra;
  SubalgebraEmbedding emb_a;
  SubalgebraEmbedding emb_b;
};

/// Checks that B is a unital graded-commutative (curved) DGA: arity at most 2,
/// products only at beta = 0 and b.b' = (-1)^{|b||b'|} b'.b for b.b' = (-1)^{|b|} m_{2,0}(b, b').
/// Throws std::invalid_argument naming the first failure.
void require_commutative_dga(const AInfAlgebra& b);

/// C = A (x) B on basis "a|b" for a unital A-infinity algebra A and a
/// graded-commutative DGA B:
///   m^C_{k,beta}(a_1|b_1, ..., a_k|b_k) = (-1)^{sum_{i<j} |b_i| ||a_j||} m^A_{k,beta}(a_1..a_k) | b_1...b_k,
///   m^C_{1,beta}(a|b) += (-1)^{|a|} a | m^B_{1,beta}(b),   m^C_{0,beta} += e_A | m^B_{0,beta}.
/// A and B embed as a|e_B and e_A|b, and K(a (x) b) = a|b.
ProductModel tensor_with_commutative(const AInfAlgebra& a, const AInfAlgebra& b, const std::string& name = {});

/// Commutative product b.b' = (-1)^{|b|} m_{2,0}(b, b') in B.
Combination<Scalar> commutative_product(const AInfAlgebra& b, int x, int y);

/// Lift of operations on A to A (x) B (basis index a * dim B + b):
/// op(a_1|b_1, ..., a_k|b_k) = sign (-1)^{sum_{i<j} |b_i| ||a_j||} op^A(a_1..a_k) | b_1...b_k.
template <class C>
std::vector<StructureConstant<C>> tensor_lift(const GradedBasis& a_basis, const std::vector<StructureConstant<C>>& ops,
                                              const AInfAlgebra& b, int sign = 1) {
  const int db = b.dim();
  const int eb = *b.unit();
  using Key = std::tuple<int, MonoidElement, std::vector<int>, int>;
  std::map<Key, C> acc;
  for (const auto& c : ops) {
    std::vector<int> ys(c.k, 0);
    while (true) {
      long long sign_exp = 0;
      long long deg_prefix = 0;
      for (int j = 0; j < c.k; ++j) {
        sign_exp += deg_prefix * shifted(a_basis.degree(c.inputs[j]));
        deg_prefix += b.basis().degree(ys[j]);
      }
      Combination<Scalar> prod{{eb, Scalar(1)}};
      for (int y : ys) {
        Accumulator<Scalar> next;
        for (const auto& t : prod)
          for (const auto& u : commutative_product(b, t.index, y)) next.add(u.index, t.coeff * u.coeff);
        prod = next.take();
        if (prod.empty()) break;
      }
      std::vector<int> inputs(c.k);
      for (int j = 0; j < c.k; ++j) inputs[j] = c.inputs[j] * db + ys[j];
      const C scaled = c.coeff * C(Scalar(sign * sign_of_parity(sign_exp)));
      for (const auto& t : prod) acc[{c.k, c.beta, inputs, c.output * db + t.index}] += scaled * C(t.coeff);
      int p = c.k - 1;
      while (p >= 0 && ++ys[p] == db) ys[p--] = 0;
      if (p < 0) break;
    }
  }
  std::vector<StructureConstant<C>> out;
  for (auto& [key, coeff] : acc) {
    if (is_zero(coeff)) continue;
    const auto& [k, beta, inputs, output] = key;
    out.push_back({k, beta, inputs, output, coeff, ""});
  }
  return out;
}

/// The operations B contributes to A (x) B: (-1)^{|a|} a | m^B_{1,beta}(b) and e_A | m^B_{0,beta}.
std::vector<Constant> commutative_factor_ops(const AInfAlgebra& a, const AInfAlgebra& b);

/// Sums constants with equal (k, beta, inputs, output), dropping zeros.
std::vector<Constant> merge_constants(const std::vector<Constant>& x, const std::vector<Constant>& y);

/// Basis of A (x) B with names "a|b".
GradedBasis tensor_basis(const GradedBasis& a, const GradedBasis& b);

}  // namespace ainf
