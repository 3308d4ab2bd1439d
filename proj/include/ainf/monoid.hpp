#pragma once

#include <string>
#include <vector>

#include "ainf/scalar.hpp"

namespace ainf {

/// Element of a discrete submonoid of R>=0 x 2Z: an energy and a Maslov index.
struct MonoidElement {
  Scalar energy;
  int mu = 0;

  bool is_zero() const { return sgn(energy) == 0 && mu == 0; }
  friend MonoidElement operator+(const MonoidElement& a, const MonoidElement& b) {
    return {Scalar(a.energy + b.energy), a.mu + b.mu};
  }
  friend bool operator==(const MonoidElement& a, const MonoidElement& b) {
    return a.mu == b.mu && a.energy == b.energy;
  }
  friend bool operator!=(const MonoidElement& a, const MonoidElement& b) { return !(a == b); }
  /// Order by (energy, mu).
  friend bool operator<(const MonoidElement& a, const MonoidElement& b) {
    int c = cmp(a.energy, b.energy);
    return c != 0 ? c < 0 : a.mu < b.mu;
  }
  std::string to_string() const;
};

/// Finitely generated discrete monoid. Construction rejects generators with
/// negative energy, odd mu, or zero energy with nonzero mu.
class EnergyMonoid {
 public:
  EnergyMonoid() = default;
  explicit EnergyMonoid(std::vector<MonoidElement> generators);

  const std::vector<MonoidElement>& generators() const { return generators_; }

  /// All distinct sums of generators with energy <= cutoff, sorted by (E, mu).
  std::vector<MonoidElement> enumerate(const Scalar& cutoff) const;
  bool contains(const MonoidElement& beta) const;

 private:
  std::vector<MonoidElement> generators_;  // sorted, unique, without (0,0)
};

EnergyMonoid monoid_sum(const EnergyMonoid& a, const EnergyMonoid& b);

}  // namespace ainf
