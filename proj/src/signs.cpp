#include "ainf/signs.hpp"

#include <stdexcept>

namespace ainf {

int koszul_prefix_sign(std::span<const Degree> degrees, std::size_t i) {
  if (i < 1 || i > degrees.size() + 1) throw std::out_of_range("koszul_prefix_sign: index out of range");
  long long total = 0;
  for (std::size_t l = 0; l + 1 < i; ++l) total += shifted(degrees[l]);
  return sign_of_parity(total);
}

int reorder_sign(std::span<const Degree> degrees, std::span<const int> perm) {
  const std::size_t n = degrees.size();
  if (perm.size() != n) throw std::invalid_argument("reorder_sign: permutation size mismatch");
  std::vector<bool> used(n, false);
  for (int p : perm) {
    if (p < 0 || static_cast<std::size_t>(p) >= n || used[p])
      throw std::invalid_argument("reorder_sign: not a permutation");
    used[p] = true;
  }
  // Every inverted pair of entries is transposed exactly once.
  long long total = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (perm[a] > perm[b]) total += static_cast<long long>(degrees[perm[a]]) * degrees[perm[b]];
  return sign_of_parity(total);
}

GammaLedger gamma_ledger_check(std::span<const Degree> degs_b, Degree deg_a, Degree deg_b, int n1,
                               int n2, int k, int i, int omit_term) {
  if (static_cast<int>(degs_b.size()) != k) throw std::invalid_argument("gamma ledger: need k degrees");
  if (i < 0 || i > k) throw std::invalid_argument("gamma ledger: need 0 <= i <= k");
  long long head = 0, tail = 0, sum_all = 0, prefix = 0, prefix_shifted = 0;
  for (int l = 1; l <= k; ++l) {
    const long long b = degs_b[l - 1];
    sum_all += b;
    if (l <= i) {
      head += (k + 1 - l) * b;
      prefix += b;
      prefix_shifted += shifted(static_cast<Degree>(b));
    } else {
      tail += (k - l) * b;
    }
  }
  const long long a = deg_a, bb = deg_b, tri = static_cast<long long>(k) * (k - 1) / 2;
  const long long g1 = head + (k - i) * (a + bb) + tail + tri + n2 * a + n1 * (bb + sum_all);
  const long long g2 = g1 + a * prefix;
  const long long g3 = g2 + (k + 1) * (a + n1);
  const long long g4_terms[5] = {head, (k - i) * bb, tail, tri, 0};
  long long g4 = g3;
  for (int t = 0; t < 4; ++t)
    if (omit_term != t + 1) g4 += g4_terms[t];
  const long long g5 = g4 + n2 * a + n1 * (bb + sum_all + k + 1);

  GammaLedger out;
  out.gamma = {parity(g1), parity(g2), parity(g3), parity(g4), parity(g5)};
  out.expected = parity(a * (1 + prefix_shifted));
  out.holds = out.gamma[4] == out.expected;
  return out;
}

}  // namespace ainf
