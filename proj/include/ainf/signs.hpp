#pragma once

#include <array>
#include <span>
#include <vector>

namespace ainf {

using Degree = int;

inline int parity(long long x) { return static_cast<int>(((x % 2) + 2) % 2); }
inline int sign_of_parity(long long x) { return parity(x) == 0 ? 1 : -1; }
/// Shifted degree |a| - 1.
inline Degree shifted(Degree d) { return d - 1; }

/// (-1) to the sum of shifted degrees of entries at 1-based positions < i.
/// Requires 1 <= i <= degrees.size() + 1; throws std::out_of_range otherwise.
int koszul_prefix_sign(std::span<const Degree> degrees, std::size_t i);

/// Koszul sign of rearranging graded entries: the output position p holds the
/// input entry perm[p]. Degrees are the plain degrees of the entries; each
/// adjacent transposition of entries of degrees a, b contributes (-1)^{ab}.
/// Throws std::invalid_argument if perm is not a bijection.
int reorder_sign(std::span<const Degree> degrees, std::span<const int> perm);

struct GammaLedger {
  std::array<int, 5> gamma{};  // parities of gamma1..gamma5
  int expected = 0;            // parity of |a|(1 + sum_{l<=i} ||b_l||)
  bool holds = false;
};

/// Evaluates the gamma1..gamma5 chain for the Kunneth sign computation and
/// compares gamma5 with |a|(1 + sum_{l<=i} ||b_l||) mod 2. degs_b has length k.
/// The omit_term argument removes one summand of gamma4 for mutation tests
/// (0 = none, 1..4 pick the summand in the order written).
GammaLedger gamma_ledger_check(std::span<const Degree> degs_b, Degree deg_a, Degree deg_b, int n1,
                               int n2, int k, int i, int omit_term = 0);

}  // namespace ainf
