#include "ainf/ainf_checks.hpp"

#include <stdexcept>

namespace ainf {

Json location_json(const GradedBasis& basis, const MonoidElement& beta, int n, std::span<const int> tuple) {
  Json names = Json::array();
  for (int i : tuple) names.push_back(basis.name(i));
  return {{"beta", {format_scalar(beta.energy), beta.mu}}, {"n", n}, {"tuple", names}};
}

std::vector<MonoidElement> relation_targets(const BetaSet& betas, const std::optional<Scalar>& cutoff) {
  return betas.pair_sums(cutoff);
}

Combination<Scalar> ainf_defect(const AInfAlgebra& alg, const MonoidElement& beta, std::span<const int> tuple) {
  for (int i : tuple)
    if (i < 0 || i >= alg.dim()) throw std::invalid_argument("ainf_defect: basis index out of range");
  Accumulator<Scalar> acc;
  compose_sum(alg.table(), alg.table(), alg.betas().splits(beta), tuple, alg.basis().degrees(), true, Scalar(1),
              acc);
  return acc.take();
}

Report check_ainf(const AInfAlgebra& alg, const CheckOptions& opts) {
  Report report;
  report.check = "check-ainf";
  const auto targets = relation_targets(alg.betas(), alg.cutoff());
  report.instances = scan_ainf<Scalar>(
      alg.table(), alg.betas(), targets, alg.basis(), opts,
      [&](const MonoidElement& beta, int n, const std::vector<int>& tuple, const Combination<Scalar>& defect) {
        report.add_violation("ainf-relation", location_json(alg.basis(), beta, n, tuple),
                             "defect " + combination_to_string(defect, alg.basis()));
        return true;
      });
  report.data["max_arity"] = alg.max_arity();
  report.data["max_relation_arity"] = std::max(0, 2 * alg.max_arity() - 1);
  report.data["targets"] = targets.size();
  return report;
}

CheckOptions mutation_options(const AInfAlgebra& alg, const std::string& constant_id) {
  CheckOptions opts;
  opts.stop_at_first = true;
  if (auto idx = alg.constant_index(constant_id)) {
    const auto& c = alg.constants()[*idx];
    if (!c.inputs.empty()) opts.priority_blocks.push_back(c.inputs);
  }
  return opts;
}

Report check_unit(const AInfAlgebra& alg) {
  if (!alg.unit()) throw std::invalid_argument(alg.name() + ": unit not in basis (no unit declared)");
  const int e = *alg.unit();
  const auto& basis = alg.basis();
  Report report;
  report.check = "check-unit";
  const MonoidElement zero{};
  for (int a = 0; a < alg.dim(); ++a) {
    Combination<Scalar> expected{{a, Scalar(1)}};
    std::vector<int> left{e, a};
    std::vector<int> right{a, e};
    ++report.instances;
    auto l = alg.op(2, zero, left);
    if (!(l.size() == 1 && l[0].index == a && l[0].coeff == 1))
      report.add_violation("unit-left", location_json(basis, zero, 2, left),
                           "m_{2,0}(e,a) = " + combination_to_string(l, basis) + ", expected " + basis.name(a));
    ++report.instances;
    auto r = alg.op(2, zero, right);
    const Scalar twist = sign_of_parity(basis.degree(a));
    for (auto& t : r) t.coeff *= twist;
    if (!(r.size() == 1 && r[0].index == a && r[0].coeff == 1))
      report.add_violation("unit-right-sign", location_json(basis, zero, 2, right),
                           "(-1)^{|a|} m_{2,0}(a,e) = " + combination_to_string(r, basis) + ", expected " +
                               basis.name(a));
  }
  for (const auto& c : alg.constants()) {
    bool has_unit = false;
    for (int i : c.inputs) has_unit = has_unit || i == e;
    if (!has_unit) continue;
    ++report.instances;
    if (c.k == 2 && c.beta.is_zero()) continue;
    report.add_violation("unit-vanishing", location_json(basis, c.beta, c.k, c.inputs),
                         "constant " + c.id + " is nonzero on a tuple containing the unit");
  }
  return report;
}

AInfAlgebra drop_unit_twist(const AInfAlgebra& alg, const std::string& element) {
  if (!alg.unit()) throw std::invalid_argument(alg.name() + ": unit not in basis (no unit declared)");
  const int e = *alg.unit();
  std::optional<int> only;
  if (!element.empty()) only = alg.basis().index_of(element);
  auto constants = alg.constants();
  for (auto& c : constants) {
    if (c.k != 2 || !c.beta.is_zero() || c.inputs[1] != e || c.inputs[0] == e) continue;
    const int a = c.inputs[0];
    if (parity(alg.basis().degree(a)) == 0 || (only && *only != a)) continue;
    c.coeff = -c.coeff;
  }
  return alg.with_constants(std::move(constants));
}

}  // namespace ainf
