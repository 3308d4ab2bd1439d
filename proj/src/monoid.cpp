#include "ainf/monoid.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ainf {

std::string MonoidElement::to_string() const {
  return "(" + format_scalar(energy) + "," + std::to_string(mu) + ")";
}

EnergyMonoid::EnergyMonoid(std::vector<MonoidElement> generators) {
  for (auto& g : generators) {
    g.energy.canonicalize();
    if (sgn(g.energy) < 0) throw std::invalid_argument("monoid generator with negative energy " + g.to_string());
    if (g.mu % 2 != 0) throw std::invalid_argument("monoid generator with odd mu " + g.to_string());
    if (sgn(g.energy) == 0 && g.mu != 0)
      throw std::invalid_argument("monoid generator " + g.to_string() + " has zero energy and nonzero mu");
    if (!g.is_zero()) generators_.push_back(g);
  }
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
}

std::vector<MonoidElement> EnergyMonoid::enumerate(const Scalar& cutoff) const {
  if (sgn(cutoff) < 0) throw std::invalid_argument("negative enumeration cutoff");
  std::set<MonoidElement> seen{MonoidElement{}};
  std::vector<MonoidElement> frontier{MonoidElement{}};
  while (!frontier.empty()) {
    std::vector<MonoidElement> next;
    for (const auto& x : frontier) {
      for (const auto& g : generators_) {
        MonoidElement y = x + g;
        if (y.energy > cutoff) continue;
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

bool EnergyMonoid::contains(const MonoidElement& beta) const {
  if (sgn(beta.energy) < 0) return false;
  auto all = enumerate(beta.energy);
  return std::binary_search(all.begin(), all.end(), beta);
}

EnergyMonoid monoid_sum(const EnergyMonoid& a, const EnergyMonoid& b) {
  std::vector<MonoidElement> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return EnergyMonoid(std::move(gens));
}

}  // namespace ainf
