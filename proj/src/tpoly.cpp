#include "ainf/tpoly.hpp"

#include <sstream>

namespace ainf {

TPoly::TPoly(const Scalar& constant) {
  if (sgn(constant) != 0) c_.push_back(constant);
}

TPoly::TPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

void TPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Scalar TPoly::at(const Scalar& t) const {
  Scalar acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

TPoly TPoly::derivative() const {
  std::vector<Scalar> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return TPoly(std::move(d));
}

TPoly TPoly::integral_from_zero() const {
  std::vector<Scalar> r(c_.size() + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i + 1] = c_[i] / static_cast<long>(i + 1);
  return TPoly(std::move(r));
}

TPoly TPoly::integral_to_one() const {
  TPoly anti = integral_from_zero();
  return TPoly(anti.at(1)) - anti;
}

TPoly& TPoly::operator+=(const TPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

TPoly& TPoly::operator*=(const TPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Scalar> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  c_ = std::move(r);
  trim();
  return *this;
}

std::vector<std::string> TPoly::serialize() const {
  std::vector<std::string> out;
  for (const auto& x : c_) out.push_back(format_scalar(x));
  return out;
}

std::string TPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << format_scalar(c_[i]);
    if (i == 1) os << "*t";
    if (i > 1) os << "*t^" << i;
  }
  return os.str();
}

}  // namespace ainf
