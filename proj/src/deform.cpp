#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "ainf/ainf_checks.hpp"

namespace ainf {

namespace {

std::optional<Scalar> min_cutoff(const std::optional<Scalar>& a, const std::optional<Scalar>& b) {
  if (!a) return b;
  if (!b) return a;
  return *a < *b ? *a : *b;
}

}  // namespace

Degree validate_bounding_candidate(const AInfAlgebra& alg, const AlgElement& b) {
  std::optional<Degree> degree;
  for (const auto& [i, c] : b.coeffs()) {
    if (i < 0 || i >= alg.dim()) throw std::invalid_argument("bounding cochain: basis index out of range");
    const Degree d = alg.basis().degree(i);
    if (degree && *degree != d)
      throw std::invalid_argument("bounding cochain is not homogeneous (component " + alg.basis().name(i) + ")");
    degree = d;
    if (sgn(*c.valuation()) <= 0)
      throw std::invalid_argument("bounding cochain has a zero-energy component on " + alg.basis().name(i) +
                                  "; the deformation sum would not terminate");
  }
  if (degree && parity(*degree) == 0)
    throw std::invalid_argument("bounding cochain must have odd degree, got " + std::to_string(*degree));
  return degree.value_or(1);
}

AInfAlgebra deform(const AInfAlgebra& alg, const AlgElement& b, const std::optional<Scalar>& cutoff) {
  const Degree db = validate_bounding_candidate(alg, b);
  const auto E = min_cutoff(alg.cutoff(), cutoff);
  if (b.is_zero()) return E ? alg.truncated(*E) : alg;

  std::vector<std::vector<std::pair<Scalar, Scalar>>> b_terms(alg.dim());
  std::set<Scalar> energies;
  for (const auto& [i, c] : b.coeffs())
    for (const auto& [e, v] : c.terms()) {
      b_terms[i].emplace_back(e, v);
      energies.insert(e);
    }

  using Key = std::tuple<MonoidElement, int, std::vector<int>, int>;
  std::map<Key, Scalar> acc;
  for (const auto& c : alg.constants()) {
    const int K = c.k;
    for (unsigned mask = 0; mask < (1u << K); ++mask) {
      // mask bit p set: position p holds an argument a; otherwise a copy of b.
      std::vector<int> kept;
      std::vector<int> b_positions;
      for (int p = 0; p < K; ++p) (mask >> p & 1u ? kept : b_positions).push_back(c.inputs[p]);
      bool feasible = true;
      for (int idx : b_positions) feasible = feasible && !b_terms[idx].empty();
      if (!feasible) continue;
      const int i = static_cast<int>(b_positions.size());
      const int mu = c.beta.mu + i * (1 - db);
      std::vector<std::size_t> pos(i, 0);
      while (true) {
        Scalar lambda = c.beta.energy;
        Scalar coeff = c.coeff;
        for (int q = 0; q < i; ++q) {
          const auto& [e, v] = b_terms[b_positions[q]][pos[q]];
          lambda += e;
          coeff *= v;
        }
        if (!E || lambda <= *E) {
          const int k = K - i;
          acc[Key{MonoidElement{lambda, mu}, k, kept, c.output}] += coeff;
        }
        int q = i - 1;
        while (q >= 0 && ++pos[q] == b_terms[b_positions[q]].size()) pos[q--] = 0;
        if (q < 0) break;
      }
    }
  }

  std::vector<Constant> constants;
  for (auto& [key, coeff] : acc) {
    if (is_zero(coeff)) continue;
    const auto& [beta, k, inputs, output] = key;
    constants.push_back(Constant{k, beta, inputs, output, coeff, {}});
  }
  auto generators = alg.monoid().generators();
  for (const auto& e : energies) generators.push_back(MonoidElement{e, 1 - db});
  return AInfAlgebra(alg.name() + "^b", alg.basis(), EnergyMonoid(std::move(generators)), E, alg.unit(),
                     std::move(constants));
}

McDefect mc_defect(const AInfAlgebra& alg, const AlgElement& b, const std::optional<Scalar>& cutoff) {
  if (!alg.unit()) throw std::invalid_argument(alg.name() + ": mc_defect requires a unit");
  const auto deformed = deform(alg, b, cutoff);
  const auto& E = deformed.cutoff();
  AlgElement m0(E);
  for (const auto& c : deformed.constants())
    if (c.k == 0) m0.add(c.output, c.coeff, c.beta.energy);
  McDefect out{m0.coefficient(*alg.unit()), AlgElement(E)};
  for (const auto& [i, v] : m0.coeffs())
    if (i != *alg.unit()) out.remainder.add(i, v);
  return out;
}

std::vector<AlgElement> deformed_differential(const AInfAlgebra& alg, const AlgElement& b,
                                              const std::optional<Scalar>& cutoff) {
  const auto deformed = deform(alg, b, cutoff);
  std::vector<AlgElement> columns(alg.dim(), AlgElement(deformed.cutoff()));
  for (const auto& c : deformed.constants())
    if (c.k == 1) columns[c.inputs[0]].add(c.output, c.coeff, c.beta.energy);
  return columns;
}

}  // namespace ainf
