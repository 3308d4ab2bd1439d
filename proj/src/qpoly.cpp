#include "ainf/qpoly.hpp"

#include <stdexcept>

namespace ainf {

QPoly::QPoly(Scalar c) {
  if (sgn(c) != 0) coeffs_.push_back(std::move(c));
}

QPoly QPoly::monomial(const Scalar& c, int exponent) {
  QPoly p;
  if (sgn(c) == 0) return p;
  p.coeffs_.assign(exponent + 1, Scalar(0));
  p.coeffs_.back() = c;
  return p;
}

void QPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

bool QPoly::is_monomial() const {
  if (coeffs_.empty()) return false;
  for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

int QPoly::order() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return static_cast<int>(i);
  return -1;
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  QPoly out = *this;
  const Scalar inv = 1 / leading();
  for (auto& c : out.coeffs_) c *= inv;
  return out;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  out.trim();
  return out;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  QPoly rem = *this;
  QPoly quot;
  const int dd = divisor.degree();
  if (rem.degree() >= dd) quot.coeffs_.assign(rem.degree() - dd + 1, Scalar(0));
  while (!rem.is_zero() && rem.degree() >= dd) {
    const int shift = rem.degree() - dd;
    const Scalar f = rem.leading() / divisor.leading();
    quot.coeffs_[shift] = f;
    for (int i = 0; i <= dd; ++i) rem.coeffs_[shift + i] -= f * divisor.coeffs_[i];
    rem.trim();
  }
  quot.trim();
  return {quot, rem};
}

QPoly QPoly::exact_div(const QPoly& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    if (!out.empty()) out += " + ";
    out += format_scalar(coeffs_[i]);
    if (i == 1) out += "*q";
    else if (i > 1) out += "*q^" + std::to_string(i);
  }
  return out;
}

}  // namespace ainf
