#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ainf/report.hpp"
#include "ainf/torus.hpp"

namespace ainf {

/// Deterministic random source for the torus suites. Bounded draws use
/// rejection sampling on the raw 64-bit stream, so sequences are identical
/// across standard libraries.
class SuiteRng {
 public:
  explicit SuiteRng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi);
  /// Random form on T^dim with up to max_terms terms; fixed degree when degree >= 0.
  TorusForm form(int dim, int degree = -1, int max_terms = 3, int band = 2);
  /// Random coordinate projection T^source -> T^target (coordinates shuffled).
  TorusMap projection(int source, int target);
  /// Random integral linear map with entries in [-2, 2].
  TorusMap linear(int source, int target);

 private:
  std::mt19937_64 engine_;
};

/// Names of the identity groups, in report order.
const std::vector<std::string>& appendix_groups();

/// Randomized exact verification of the fiber-integration identities on tori
/// of dimension at most 3: composition, both projection formulas, base change,
/// products, vanishing through a lower-dimensional factor, closed Stokes,
/// composition of correspondences and the defining adjunction. Each trial is
/// seeded independently from (seed, group, trial) and violations record that
/// trial seed as a reproducer.
Report appendix_suite(std::uint64_t seed, int trials,
                      FiberOrientation orientation = FiberOrientation::Ambient);

/// Runs one trial of one group; returns an empty string on success, otherwise a
/// description of the nonzero residual.
std::string appendix_trial(const std::string& group, std::uint64_t trial_seed, FiberOrientation orientation);

std::uint64_t appendix_trial_seed(std::uint64_t seed, std::size_t group, int trial);

}  // namespace ainf
