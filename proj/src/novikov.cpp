#include "ainf/novikov.hpp"

#include <sstream>
#include <stdexcept>

namespace ainf {

NovikovElement::NovikovElement(std::optional<Scalar> cutoff) : cutoff_(std::move(cutoff)) {
  if (cutoff_ && sgn(*cutoff_) <= 0) throw std::invalid_argument("Novikov cutoff must be positive");
}

NovikovElement NovikovElement::monomial(const Scalar& coeff, const Scalar& energy,
                                        std::optional<Scalar> cutoff) {
  NovikovElement x(std::move(cutoff));
  x.add_term(energy, coeff);
  return x;
}

std::optional<Scalar> NovikovElement::valuation() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

Scalar NovikovElement::coefficient(const Scalar& energy) const {
  auto it = terms_.find(energy);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void NovikovElement::add_term(const Scalar& energy_in, const Scalar& coeff_in) {
  Scalar energy = energy_in, coeff = coeff_in;
  energy.canonicalize();
  coeff.canonicalize();
  if (sgn(energy) < 0) throw std::invalid_argument("negative energy in Novikov element");
  if (sgn(coeff) == 0) return;
  if (cutoff_ && energy >= *cutoff_) return;
  auto [it, inserted] = terms_.try_emplace(energy, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

NovikovElement NovikovElement::scaled(const Scalar& factor) const {
  NovikovElement out(cutoff_);
  if (sgn(factor) == 0) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, Scalar(c * factor));
  return out;
}

NovikovElement NovikovElement::shifted(const Scalar& energy) const {
  NovikovElement out(cutoff_);
  for (const auto& [e, c] : terms_) out.add_term(Scalar(e + energy), c);
  return out;
}

NovikovElement NovikovElement::truncated(const Scalar& cutoff) const {
  NovikovElement out(cutoff_ && *cutoff_ < cutoff ? *cutoff_ : cutoff);
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  return out;
}

NovikovElement NovikovElement::with_cutoff(std::optional<Scalar> cutoff) const {
  NovikovElement out(std::move(cutoff));
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  return out;
}

void NovikovElement::require_same_mode(const NovikovElement& other) const {
  if (cutoff_ != other.cutoff_) throw std::invalid_argument("mismatched Novikov truncation modes");
}

NovikovElement& NovikovElement::operator+=(const NovikovElement& other) {
  require_same_mode(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

NovikovElement& NovikovElement::operator-=(const NovikovElement& other) {
  require_same_mode(other);
  for (const auto& [e, c] : other.terms_) add_term(e, Scalar(-c));
  return *this;
}

NovikovElement operator*(const NovikovElement& a, const NovikovElement& b) {
  a.require_same_mode(b);
  NovikovElement out(a.cutoff_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Scalar e = ea + eb;
      if (a.cutoff_ && e >= *a.cutoff_) break;  // energies of b increase
      out.add_term(e, Scalar(ca * cb));
    }
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> NovikovElement::serialize() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.emplace_back(format_scalar(e), format_scalar(c));
  return out;
}

std::string NovikovElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << format_scalar(c);
    if (sgn(e) != 0) os << "*T^" << format_scalar(e);
  }
  return os.str();
}

NovikovElement nov_arith(const NovikovElement& x, const NovikovElement& y, NovikovOp op) {
  return op == NovikovOp::Add ? x + y : x * y;
}

}  // namespace ainf
