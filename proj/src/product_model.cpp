#include "ainf/product_model.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

#include "ainf/signs.hpp"

namespace ainf {

Combination<Scalar> commutative_product(const AInfAlgebra& b, int x, int y) {
  const int in[2] = {x, y};
  auto out = b.op(2, MonoidElement{}, in);
  if (parity(b.basis().degree(x)))
    for (auto& t : out) t.coeff = -t.coeff;
  return out;
}

void require_commutative_dga(const AInfAlgebra& b) {
  if (!b.unit()) throw std::invalid_argument(b.name() + ": commutative factor needs a unit");
  for (const auto& c : b.constants()) {
    if (c.k > 2) throw std::invalid_argument(b.name() + ": commutative factor has an operation of arity > 2");
    if (c.k == 2 && !c.beta.is_zero())
      throw std::invalid_argument(b.name() + ": commutative factor has a product at nonzero beta");
  }
  for (int x = 0; x < b.dim(); ++x)
    for (int y = 0; y < b.dim(); ++y) {
      auto xy = commutative_product(b, x, y);
      auto yx = commutative_product(b, y, x);
      if (parity(b.basis().degree(x) * b.basis().degree(y)))
        for (auto& t : yx) t.coeff = -t.coeff;
      if (xy != yx)
        throw std::invalid_argument(b.name() + ": product of " + b.basis().name(x) + " and " + b.basis().name(y) +
                                    " is not graded commutative");
    }
}

GradedBasis tensor_basis(const GradedBasis& a, const GradedBasis& b) {
  std::vector<BasisElement> elements;
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < b.size(); ++y) elements.push_back({a.name(x) + "|" + b.name(y), a.degree(x) + b.degree(y)});
  return GradedBasis(std::move(elements));
}

std::vector<Constant> commutative_factor_ops(const AInfAlgebra& a, const AInfAlgebra& b) {
  const int db = b.dim();
  std::vector<Constant> out;
  for (const auto& c : b.constants()) {
    if (c.k == 1)
      for (int x = 0; x < a.dim(); ++x)
        out.push_back({1, c.beta, {x * db + c.inputs[0]}, x * db + c.output,
                       c.coeff * sign_of_parity(a.basis().degree(x)), ""});
    else if (c.k == 0)
      out.push_back({0, c.beta, {}, *a.unit() * db + c.output, c.coeff, ""});
  }
  return out;
}

std::vector<Constant> merge_constants(const std::vector<Constant>& x, const std::vector<Constant>& y) {
  std::map<std::tuple<int, MonoidElement, std::vector<int>, int>, Scalar> acc;
  for (const auto* list : {&x, &y})
    for (const auto& c : *list) acc[{c.k, c.beta, c.inputs, c.output}] += c.coeff;
  std::vector<Constant> out;
  for (const auto& [key, coeff] : acc) {
    if (is_zero(coeff)) continue;
    const auto& [k, beta, inputs, output] = key;
    out.push_back({k, beta, inputs, output, coeff, ""});
  }
  return out;
}

ProductModel tensor_with_commutative(const AInfAlgebra& a, const AInfAlgebra& b, const std::string& name) {
  require_commutative_dga(b);
  if (!a.unit()) throw std::invalid_argument(a.name() + ": first factor needs a unit");
  if (a.cutoff() != b.cutoff()) throw std::invalid_argument("factors have different truncation modes");
  const int da = a.dim(), db = b.dim();
  const int ea = *a.unit(), eb = *b.unit();
  auto constants = merge_constants(tensor_lift<Scalar>(a.basis(), a.constants(), b), commutative_factor_ops(a, b));
  AInfAlgebra c(name.empty() ? a.name() + "x" + b.name() : name, tensor_basis(a.basis(), b.basis()),
                monoid_sum(a.monoid(), b.monoid()), a.cutoff(), ea * db + eb, std::move(constants));

  std::vector<Combination<Scalar>> images_a(da), images_b(db);
  for (int x = 0; x < da; ++x) images_a[x] = {{x * db + eb, Scalar(1)}};
  for (int y = 0; y < db; ++y) images_b[y] = {{ea * db + y, Scalar(1)}};
  SubalgebraEmbedding emb_a{"iota_" + a.name(), a, c, std::move(images_a)};
  SubalgebraEmbedding emb_b{"iota_" + b.name(), b, c, std::move(images_b)};
  return {std::move(c), std::move(emb_a), std::move(emb_b)};
}

}  // namespace ainf
