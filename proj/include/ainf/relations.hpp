#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ainf/algebra.hpp"
#include "ainf/tpoly.hpp"

namespace ainf {

inline std::string coeff_to_string(const Scalar& c) { return format_scalar(c); }
inline std::string coeff_to_string(const TPoly& c) { return c.to_string(); }

/// Small dense accumulator for sparse outputs; terms stay unsorted until take().
template <class C>
class Accumulator {
 public:
  void add(int index, const C& value) {
    for (auto& t : terms_)
      if (t.index == index) {
        t.coeff += value;
        return;
      }
    terms_.push_back({index, value});
  }
  Combination<C> take() {
    Combination<C> out;
    for (auto& t : terms_)
      if (!is_zero(t.coeff)) out.push_back(std::move(t));
    terms_.clear();
    std::sort(out.begin(), out.end(), [](const Term<C>& a, const Term<C>& b) { return a.index < b.index; });
    return out;
  }
  void clear() { terms_.clear(); }

 private:
  std::vector<Term<C>> terms_;
};

template <class C>
std::string combination_to_string(const Combination<C>& comb, const GradedBasis& basis) {
  if (comb.empty()) return "0";
  std::string out;
  for (const auto& t : comb) {
    if (!out.empty()) out += " + ";
    out += "(" + coeff_to_string(t.coeff) + ")*" + basis.name(t.index);
  }
  return out;
}

using BetaSplits = std::vector<std::pair<int, int>>;

/// Adds scale * sum over (beta1, beta2) in splits, 0 <= j <= n and insertion
/// positions i of  sign * outer_{n-j+1,beta2}(a_1..a_{i-1}, inner_{j,beta1}(a_i..), ..a_n)
/// into acc. With koszul the sign is (-1)^{sum_{l<i} ||a_l||}, otherwise +1.
/// Splits list (inner beta index, outer beta index) pairs in a shared BetaSet.
template <class C>
void compose_sum(const OpTable<C>& outer, const OpTable<C>& inner, const BetaSplits& splits,
                 std::span<const int> tuple, std::span<const Degree> degrees, bool koszul, const C& scale,
                 Accumulator<C>& acc) {
  const int n = static_cast<int>(tuple.size());
  std::vector<int> buf;
  for (const auto& [b1, b2] : splits) {
    for (int j = 0; j <= n; ++j) {
      const int outer_k = n - j + 1;
      if (!inner.has(b1, j) || !outer.has(b2, outer_k)) continue;
      long long prefix = 0;
      for (int i = 0; i + j <= n; ++i) {
        if (i > 0) prefix += shifted(degrees[tuple[i - 1]]);
        const auto* in = inner.find(j, b1, tuple.subspan(i, j));
        if (!in) continue;
        buf.assign(tuple.begin(), tuple.begin() + i);
        buf.push_back(0);
        buf.insert(buf.end(), tuple.begin() + i + j, tuple.end());
        const bool negate = koszul && parity(prefix) == 1;
        for (const auto& t : *in) {
          buf[i] = t.index;
          const auto* out = outer.find(outer_k, b2, buf);
          if (!out) continue;
          C f = t.coeff * scale;
          if (negate) f = -f;
          for (const auto& o : *out) acc.add(o.index, f * o.coeff);
        }
      }
    }
  }
}

/// True if some term of the composed sum can be nonzero for arity n.
template <class C>
bool compose_possible(const OpTable<C>& outer, const OpTable<C>& inner, const BetaSplits& splits, int n) {
  for (const auto& [b1, b2] : splits)
    for (int j = 0; j <= n; ++j)
      if (inner.has(b1, j) && outer.has(b2, n - j + 1)) return true;
  return false;
}

/// Odometer over all tuples of length n with entries in [0, dim).
class TupleIterator {
 public:
  TupleIterator(int dim, int n) : dim_(dim), tuple_(n, 0), done_(n > 0 && dim == 0) {}
  bool done() const { return done_; }
  const std::vector<int>& operator*() const { return tuple_; }
  void next() {
    int p = static_cast<int>(tuple_.size()) - 1;
    while (p >= 0 && ++tuple_[p] == dim_) tuple_[p--] = 0;
    if (p < 0) done_ = true;
  }

 private:
  int dim_;
  std::vector<int> tuple_;
  bool done_;
};

/// Scan options for relation checkers.
struct CheckOptions {
  /// Stop after the first violation.
  bool stop_at_first = false;
  /// Input blocks that are tried first at each (beta, n): every tuple containing
  /// one of these as a contiguous block is evaluated before the full scan. Used
  /// to locate mutations quickly. Pass/fail is unaffected, but the reported
  /// counterexample for a (beta, n) may be a priority tuple.
  std::vector<std::vector<int>> priority_blocks;
};

/// Callback receiving (beta, n, tuple, defect); returns false to stop the scan.
template <class C>
using DefectSink = std::function<bool(const MonoidElement&, int, const std::vector<int>&, const Combination<C>&)>;

/// Runs the quadratic A-infinity relation on a single table over all targets,
/// arities n <= max(0, 2*maxArity - 1) and basis tuples. Reports the first
/// nonzero defect per (beta, n). Returns the number of evaluated instances.
template <class C>
std::size_t scan_ainf(const OpTable<C>& table, const BetaSet& betas, const std::vector<MonoidElement>& targets,
                      const GradedBasis& basis, const CheckOptions& opts, const DefectSink<C>& sink) {
  std::size_t count = 0;
  const int n_max = std::max(0, 2 * table.max_arity() - 1);
  Accumulator<C> acc;
  const C one(1);
  bool stop = false;
  for (const auto& beta : targets) {
    const auto splits = betas.splits(beta);
    if (splits.empty()) continue;
    for (int n = 0; n <= n_max && !stop; ++n) {
      if (!compose_possible(table, table, splits, n)) continue;
      auto evaluate = [&](const std::vector<int>& tuple) {
        ++count;
        compose_sum(table, table, splits, tuple, basis.degrees(), true, one, acc);
        auto defect = acc.take();
        if (defect.empty()) return false;
        if (!sink(beta, n, tuple, defect) || opts.stop_at_first) stop = true;
        return true;
      };
      bool found = false;
      for (const auto& block : opts.priority_blocks) {
        const int bl = static_cast<int>(block.size());
        if (bl > n || found) continue;
        for (int pos = 0; pos + bl <= n && !found; ++pos) {
          for (TupleIterator it(basis.size(), n - bl); !it.done() && !found; it.next()) {
            std::vector<int> tuple((*it).begin(), (*it).begin() + pos);
            tuple.insert(tuple.end(), block.begin(), block.end());
            tuple.insert(tuple.end(), (*it).begin() + pos, (*it).end());
            found = evaluate(tuple);
          }
        }
      }
      for (TupleIterator it(basis.size(), n); !it.done() && !found; it.next()) found = evaluate(*it);
    }
    if (stop) break;
  }
  return count;
}

}  // namespace ainf
