#include "ainf/algebra.hpp"

#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace ainf {

GradedBasis::GradedBasis(std::vector<BasisElement> elements) : elements_(std::move(elements)) {
  degrees_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const auto& name = elements_[i].name;
    if (name.empty()) throw std::invalid_argument("empty basis element name");
    if (!index_.emplace(name, static_cast<int>(i)).second)
      throw std::invalid_argument("duplicate basis element '" + name + "'");
    degrees_.push_back(elements_[i].degree);
  }
}

std::optional<int> GradedBasis::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int GradedBasis::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw std::invalid_argument("unknown basis element '" + std::string(name) + "'");
}

BetaSet::BetaSet(std::vector<MonoidElement> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  elements_ = std::move(elements);
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], static_cast<int>(i));
}

std::optional<int> BetaSet::find(const MonoidElement& beta) const {
  auto it = index_.find(beta);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<int, int>> BetaSet::splits(const MonoidElement& beta) const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i) {
    MonoidElement rest{Scalar(beta.energy - elements_[i].energy), beta.mu - elements_[i].mu};
    if (sgn(rest.energy) < 0) break;
    if (auto j = find(rest)) out.emplace_back(i, *j);
  }
  return out;
}

std::vector<MonoidElement> BetaSet::pair_sums(const std::optional<Scalar>& cutoff) const {
  std::set<MonoidElement> sums;
  auto keep = [&](const MonoidElement& b) {
    if (!cutoff || b.energy <= *cutoff) sums.insert(b);
  };
  for (const auto& a : elements_) {
    keep(a);
    for (const auto& b : elements_) keep(a + b);
  }
  return {sums.begin(), sums.end()};
}

bool degree_ok(const GradedBasis& basis, int k, const MonoidElement& beta, std::span<const int> inputs,
               int output, int shift) {
  long long total = shift - k - beta.mu;
  for (int i : inputs) total += basis.degree(i);
  return basis.degree(output) == total;
}

std::string constant_label(const GradedBasis& basis, int k, const MonoidElement& beta,
                           std::span<const int> inputs) {
  std::ostringstream os;
  os << "m_{" << k << "," << beta.to_string() << "}(";
  for (std::size_t i = 0; i < inputs.size(); ++i) os << (i ? "," : "") << basis.name(inputs[i]);
  os << ")";
  return os.str();
}

AInfAlgebra::AInfAlgebra(std::string name, GradedBasis basis, EnergyMonoid monoid,
                         std::optional<Scalar> cutoff, std::optional<int> unit,
                         std::vector<Constant> constants)
    : name_(std::move(name)),
      basis_(std::move(basis)),
      monoid_(std::move(monoid)),
      cutoff_(std::move(cutoff)),
      unit_(unit),
      constants_(std::move(constants)) {
  if (cutoff_ && sgn(*cutoff_) <= 0) throw std::invalid_argument(name_ + ": cutoff must be positive");
  if (unit_) {
    if (*unit_ < 0 || *unit_ >= basis_.size()) throw std::invalid_argument(name_ + ": unit not in basis");
    if (basis_.degree(*unit_) != 0) throw std::invalid_argument(name_ + ": unit must have degree 0");
  }
  std::vector<MonoidElement> seen_betas;
  std::set<std::tuple<int, MonoidElement, std::vector<int>, int>> keys;
  std::set<std::string> ids;
  for (std::size_t n = 0; n < constants_.size(); ++n) {
    auto& c = constants_[n];
    if (c.id.empty()) c.id = name_ + "#" + std::to_string(n);
    if (!ids.insert(c.id).second) throw std::invalid_argument(name_ + ": duplicate constant id " + c.id);
    if (c.k < 0 || static_cast<std::size_t>(c.k) != c.inputs.size())
      throw std::invalid_argument(c.id + ": arity does not match the number of inputs");
    for (int i : c.inputs)
      if (i < 0 || i >= basis_.size()) throw std::invalid_argument(c.id + ": input index out of range");
    if (c.output < 0 || c.output >= basis_.size())
      throw std::invalid_argument(c.id + ": output index out of range");
    const std::string label = c.id + " " + constant_label(basis_, c.k, c.beta, c.inputs);
    if (is_zero(c.coeff)) throw std::invalid_argument(label + ": zero coefficient");
    if (c.k == 0 && c.beta.is_zero()) throw std::invalid_argument(label + ": m_{0,0} must vanish");
    if (!monoid_.contains(c.beta))
      throw std::invalid_argument(label + ": beta " + c.beta.to_string() + " is not in the monoid");
    if (cutoff_ && c.beta.energy > *cutoff_)
      throw std::invalid_argument(label + ": energy exceeds the cutoff " + format_scalar(*cutoff_));
    if (!degree_ok(basis_, c.k, c.beta, c.inputs, c.output, 2))
      throw std::invalid_argument(label + ": output " + basis_.name(c.output) +
                                  " violates the degree constraint 2-k-mu");
    if (!keys.emplace(c.k, c.beta, c.inputs, c.output).second)
      throw std::invalid_argument(label + ": duplicate constant for output " + basis_.name(c.output));
    seen_betas.push_back(c.beta);
  }
  betas_ = BetaSet(std::move(seen_betas));
  for (const auto& c : constants_) table_.add(c.k, *betas_.find(c.beta), c.inputs, c.output, c.coeff);
}

AInfAlgebra AInfAlgebra::truncated(const Scalar& cutoff) const {
  std::vector<Constant> kept;
  for (const auto& c : constants_)
    if (c.beta.energy <= cutoff) kept.push_back(c);
  Scalar e = cutoff_ && *cutoff_ < cutoff ? *cutoff_ : cutoff;
  return AInfAlgebra(name_, basis_, monoid_, e, unit_, std::move(kept));
}

AInfAlgebra AInfAlgebra::with_constants(std::vector<Constant> constants) const {
  return AInfAlgebra(name_, basis_, monoid_, cutoff_, unit_, std::move(constants));
}

std::optional<std::size_t> AInfAlgebra::constant_index(const std::string& id) const {
  for (std::size_t i = 0; i < constants_.size(); ++i)
    if (constants_[i].id == id) return i;
  return std::nullopt;
}

AInfAlgebra AInfAlgebra::with_flipped(const std::string& id) const {
  auto idx = constant_index(id);
  if (!idx) throw std::invalid_argument("no constant with id '" + id + "'");
  auto constants = constants_;
  constants[*idx].coeff = -constants[*idx].coeff;
  return with_constants(std::move(constants));
}

Combination<Scalar> AInfAlgebra::op(int k, const MonoidElement& beta, std::span<const int> inputs) const {
  auto b = betas_.find(beta);
  if (!b) return {};
  const auto* comb = table_.find(k, *b, inputs);
  return comb ? *comb : Combination<Scalar>{};
}

NovikovElement AlgElement::coefficient(int index) const {
  auto it = coeffs_.find(index);
  return it == coeffs_.end() ? NovikovElement(cutoff_) : it->second;
}

void AlgElement::add(int index, const NovikovElement& value) {
  auto v = value.cutoff() == cutoff_ ? value : value.with_cutoff(cutoff_);
  if (v.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(index, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

void AlgElement::add(int index, const Scalar& coeff, const Scalar& energy) {
  add(index, NovikovElement::monomial(coeff, energy, cutoff_));
}

AlgElement AlgElement::scaled(const Scalar& factor) const {
  AlgElement out(cutoff_);
  for (const auto& [i, c] : coeffs_) out.add(i, c.scaled(factor));
  return out;
}

AlgElement AlgElement::with_cutoff(std::optional<Scalar> cutoff) const {
  AlgElement out(std::move(cutoff));
  for (const auto& [i, c] : coeffs_) out.add(i, c);
  return out;
}

AlgElement& AlgElement::operator+=(const AlgElement& o) {
  if (o.cutoff_ != cutoff_) throw std::invalid_argument("mismatched truncation modes");
  for (const auto& [i, c] : o.coeffs_) add(i, c);
  return *this;
}

std::string AlgElement::to_string(const GradedBasis& basis) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : coeffs_) {
    os << (first ? "" : " + ") << "(" << c.to_string() << ")*" << basis.name(i);
    first = false;
  }
  return os.str();
}

namespace {

std::optional<Scalar> common_cutoff(const AInfAlgebra& alg, std::span<const AlgElement> inputs) {
  if (inputs.empty()) return alg.cutoff();
  const auto& cut = inputs.front().cutoff();
  for (const auto& x : inputs)
    if (x.cutoff() != cut) throw std::invalid_argument("inputs have mismatched truncation modes");
  return cut;
}

// Adds scale * op_{k,beta}(inputs) into out, expanding multilinearly.
void accumulate_op(const AInfAlgebra& alg, int k, int beta, std::span<const AlgElement> inputs,
                   const Scalar& energy_shift, AlgElement& out) {
  std::vector<std::vector<std::pair<int, const NovikovElement*>>> terms(k);
  for (int p = 0; p < k; ++p) {
    for (const auto& [i, c] : inputs[p].coeffs()) terms[p].emplace_back(i, &c);
    if (terms[p].empty()) return;
  }
  const auto& cut = out.cutoff();
  std::vector<std::size_t> pos(k, 0);
  std::vector<int> idx(k);
  while (true) {
    for (int p = 0; p < k; ++p) idx[p] = terms[p][pos[p]].first;
    if (const auto* comb = alg.table().find(k, beta, idx)) {
      NovikovElement coeff = NovikovElement::monomial(1, energy_shift, cut);
      for (int p = 0; p < k && !coeff.is_zero(); ++p) coeff = coeff * terms[p][pos[p]].second->with_cutoff(cut);
      if (!coeff.is_zero())
        for (const auto& t : *comb) out.add(t.index, coeff.scaled(t.coeff));
    }
    int p = k - 1;
    while (p >= 0 && ++pos[p] == terms[p].size()) pos[p--] = 0;
    if (p < 0) break;
  }
}

}  // namespace

AlgElement eval_op(const AInfAlgebra& alg, int k, const MonoidElement& beta,
                   std::span<const AlgElement> inputs) {
  if (k < 0 || static_cast<std::size_t>(k) != inputs.size())
    throw std::invalid_argument("eval_op: arity does not match the number of inputs");
  if (!alg.monoid().contains(beta)) throw std::invalid_argument("eval_op: beta " + beta.to_string() + " is not in the monoid");
  if (alg.cutoff() && beta.energy > *alg.cutoff())
    throw std::invalid_argument("eval_op: beta " + beta.to_string() + " lies above the cutoff");
  AlgElement out(common_cutoff(alg, inputs));
  if (auto b = alg.betas().find(beta)) accumulate_op(alg, k, *b, inputs, Scalar(0), out);
  return out;
}

AlgElement eval_assembled(const AInfAlgebra& alg, int k, std::span<const AlgElement> inputs,
                          const std::optional<Scalar>& cutoff) {
  if (k < 0 || static_cast<std::size_t>(k) != inputs.size())
    throw std::invalid_argument("eval_assembled: arity does not match the number of inputs");
  std::vector<AlgElement> cut_inputs;
  cut_inputs.reserve(inputs.size());
  for (const auto& x : inputs) cut_inputs.push_back(x.with_cutoff(cutoff));
  AlgElement out(cutoff);
  for (int b = 0; b < alg.betas().size(); ++b) {
    if (!alg.table().has(b, k)) continue;
    const auto& beta = alg.betas()[b];
    if (cutoff && beta.energy >= *cutoff) continue;
    accumulate_op(alg, k, b, cut_inputs, beta.energy, out);
  }
  return out;
}

}  // namespace ainf
