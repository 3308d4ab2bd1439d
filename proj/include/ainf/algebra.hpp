#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ainf/monoid.hpp"
#include "ainf/novikov.hpp"
#include "ainf/scalar.hpp"
#include "ainf/signs.hpp"

namespace ainf {

struct BasisElement {
  std::string name;
  Degree degree = 0;
  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Ordered basis of a Z-graded vector space with unique names.
class GradedBasis {
 public:
  GradedBasis() = default;
  explicit GradedBasis(std::vector<BasisElement> elements);

  int size() const { return static_cast<int>(elements_.size()); }
  const BasisElement& operator[](int i) const { return elements_[i]; }
  const std::vector<BasisElement>& elements() const { return elements_; }
  const std::vector<Degree>& degrees() const { return degrees_; }
  Degree degree(int i) const { return degrees_[i]; }
  const std::string& name(int i) const { return elements_[i].name; }
  std::optional<int> find(std::string_view name) const;
  /// Throws std::invalid_argument naming the unknown element.
  int index_of(std::string_view name) const;

 private:
  std::vector<BasisElement> elements_;
  std::vector<Degree> degrees_;
  std::unordered_map<std::string, int> index_;
};

template <class C>
struct Term {
  int index;
  C coeff;
  friend bool operator==(const Term& a, const Term& b) { return a.index == b.index && a.coeff == b.coeff; }
};

/// Sparse linear combination of basis elements, sorted by index, no zero terms.
template <class C>
using Combination = std::vector<Term<C>>;

/// One structure constant: the coefficient of `output` in op_{k,beta}(inputs).
template <class C>
struct StructureConstant {
  int k = 0;
  MonoidElement beta;
  std::vector<int> inputs;
  int output = 0;
  C coeff;
  std::string id;
};

using Constant = StructureConstant<Scalar>;

/// Sorted set of monoid elements with index lookup.
class BetaSet {
 public:
  BetaSet() = default;
  explicit BetaSet(std::vector<MonoidElement> elements);
  int size() const { return static_cast<int>(elements_.size()); }
  const MonoidElement& operator[](int i) const { return elements_[i]; }
  const std::vector<MonoidElement>& elements() const { return elements_; }
  std::optional<int> find(const MonoidElement& beta) const;
  /// Pairs (inner index, outer index) whose elements sum to beta.
  std::vector<std::pair<int, int>> splits(const MonoidElement& beta) const;
  /// All pairwise sums (including each element plus zero) with energy <= cutoff.
  std::vector<MonoidElement> pair_sums(const std::optional<Scalar>& cutoff) const;

 private:
  std::vector<MonoidElement> elements_;
  std::map<MonoidElement, int> index_;
};

/// Hash table of structure constants keyed by (arity, beta index, inputs).
template <class C>
class OpTable {
 public:
  void add(int k, int beta, std::span<const int> inputs, int output, const C& coeff);
  const Combination<C>* find(int k, int beta, std::span<const int> inputs) const;
  bool has(int beta, int k) const {
    auto it = arities_.find(beta);
    return it != arities_.end() && k < static_cast<int>(it->second.size()) && it->second[k];
  }
  int max_arity() const { return max_arity_; }
  bool empty() const { return map_.empty(); }

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<int>& key) const noexcept {
      std::size_t h = 1469598103934665603ull;
      for (int x : key) h = (h ^ static_cast<std::size_t>(x + 0x9e3779b9)) * 1099511628211ull;
      return h;
    }
  };
  std::unordered_map<std::vector<int>, Combination<C>, KeyHash> map_;
  std::unordered_map<int, std::vector<bool>> arities_;
  int max_arity_ = -1;
};

/// A filtered A-infinity algebra given by sparse structure constants. Immutable
/// after construction; construction validates names, degrees, m_{0,0} = 0,
/// monoid membership, the energy cutoff and the unit.
class AInfAlgebra {
 public:
  AInfAlgebra(std::string name, GradedBasis basis, EnergyMonoid monoid, std::optional<Scalar> cutoff,
              std::optional<int> unit, std::vector<Constant> constants);

  const std::string& name() const { return name_; }
  const GradedBasis& basis() const { return basis_; }
  const EnergyMonoid& monoid() const { return monoid_; }
  /// nullopt for a gapped algebra with finitely many constants, E for an
  /// algebra modulo T^E.
  const std::optional<Scalar>& cutoff() const { return cutoff_; }
  bool is_truncated() const { return cutoff_.has_value(); }
  const std::optional<int>& unit() const { return unit_; }
  const std::vector<Constant>& constants() const { return constants_; }
  const BetaSet& betas() const { return betas_; }
  const OpTable<Scalar>& table() const { return table_; }
  int max_arity() const { return table_.max_arity(); }
  int dim() const { return basis_.size(); }

  /// Constants with E(beta) <= E, as an algebra modulo T^E.
  AInfAlgebra truncated(const Scalar& cutoff) const;
  /// Same data with a replaced constant list (used by the mutation harness).
  AInfAlgebra with_constants(std::vector<Constant> constants) const;
  /// Returns the algebra with the sign of the constant `id` flipped; throws
  /// std::invalid_argument if no such constant exists.
  AInfAlgebra with_flipped(const std::string& id) const;
  std::optional<std::size_t> constant_index(const std::string& id) const;

  /// m_{k,beta} on basis inputs; empty when the constant is absent.
  Combination<Scalar> op(int k, const MonoidElement& beta, std::span<const int> inputs) const;

 private:
  std::string name_;
  GradedBasis basis_;
  EnergyMonoid monoid_;
  std::optional<Scalar> cutoff_;
  std::optional<int> unit_;
  std::vector<Constant> constants_;
  BetaSet betas_;
  OpTable<Scalar> table_;
};

/// Element of A tensored with the (truncated) Novikov ring.
class AlgElement {
 public:
  explicit AlgElement(std::optional<Scalar> cutoff = std::nullopt) : cutoff_(std::move(cutoff)) {}

  const std::map<int, NovikovElement>& coeffs() const { return coeffs_; }
  const std::optional<Scalar>& cutoff() const { return cutoff_; }
  bool is_zero() const { return coeffs_.empty(); }
  NovikovElement coefficient(int index) const;
  void add(int index, const NovikovElement& value);
  void add(int index, const Scalar& coeff, const Scalar& energy);
  AlgElement scaled(const Scalar& factor) const;
  AlgElement with_cutoff(std::optional<Scalar> cutoff) const;

  AlgElement& operator+=(const AlgElement& o);
  friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
  friend bool operator==(const AlgElement& a, const AlgElement& b) {
    return a.cutoff_ == b.cutoff_ && a.coeffs_ == b.coeffs_;
  }
  std::string to_string(const GradedBasis& basis) const;

 private:
  std::map<int, NovikovElement> coeffs_;
  std::optional<Scalar> cutoff_;
};

/// Multilinear extension of m_{k,beta} to Novikov-valued inputs. The factor
/// T^{E(beta)} is not applied. Throws if beta is not in the monoid, lies above
/// the cutoff, or the arity does not match.
AlgElement eval_op(const AInfAlgebra& alg, int k, const MonoidElement& beta,
                   std::span<const AlgElement> inputs);

/// m_k = sum_beta T^{E(beta)} m_{k,beta} applied to Novikov-valued inputs,
/// truncated at `cutoff` when given (energies >= cutoff dropped).
AlgElement eval_assembled(const AInfAlgebra& alg, int k, std::span<const AlgElement> inputs,
                          const std::optional<Scalar>& cutoff);

/// Degree constraint: output degree = sum of input degrees + shift - k - mu,
/// with shift 2 for operations and 1 for isotopy homotopies.
bool degree_ok(const GradedBasis& basis, int k, const MonoidElement& beta,
               std::span<const int> inputs, int output, int shift);

std::string constant_label(const GradedBasis& basis, int k, const MonoidElement& beta,
                           std::span<const int> inputs);

template <class C>
void OpTable<C>::add(int k, int beta, std::span<const int> inputs, int output, const C& coeff) {
  std::vector<int> key;
  key.reserve(inputs.size() + 2);
  key.push_back(k);
  key.push_back(beta);
  key.insert(key.end(), inputs.begin(), inputs.end());
  auto& comb = map_[std::move(key)];
  auto it = std::lower_bound(comb.begin(), comb.end(), output,
                             [](const Term<C>& t, int idx) { return t.index < idx; });
  if (it != comb.end() && it->index == output) {
    it->coeff += coeff;
    if (is_zero(it->coeff)) comb.erase(it);
  } else if (!is_zero(coeff)) {
    comb.insert(it, Term<C>{output, coeff});
  }
  auto& flags = arities_[beta];
  if (static_cast<int>(flags.size()) <= k) flags.resize(k + 1, false);
  flags[k] = true;
  if (k > max_arity_) max_arity_ = k;
}

template <class C>
const Combination<C>* OpTable<C>::find(int k, int beta, std::span<const int> inputs) const {
  thread_local std::vector<int> key;
  key.clear();
  key.push_back(k);
  key.push_back(beta);
  key.insert(key.end(), inputs.begin(), inputs.end());
  auto it = map_.find(key);
  if (it == map_.end() || it->second.empty()) return nullptr;
  return &it->second;
}

}  // namespace ainf
