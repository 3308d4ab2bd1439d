#pragma once

#include <string>
#include <vector>

#include "ainf/scalar.hpp"

namespace ainf {

/// Polynomial in t with rational coefficients, stored lowest degree first
/// without trailing zeros.
class TPoly {
 public:
  TPoly() = default;
  TPoly(const Scalar& constant);  // NOLINT: scalars embed as constants
  explicit TPoly(std::vector<Scalar> coeffs);
  static TPoly t() { return TPoly(std::vector<Scalar>{0, 1}); }

  const std::vector<Scalar>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Scalar at(const Scalar& t) const;

  TPoly derivative() const;
  /// The polynomial tau -> integral from tau to 1 of this(t) dt.
  TPoly integral_to_one() const;
  /// The polynomial tau -> integral from 0 to tau of this(t) dt.
  TPoly integral_from_zero() const;

  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  TPoly& operator*=(const TPoly& o);
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(TPoly a, const TPoly& b) { return a *= b; }
  friend TPoly operator-(TPoly a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend bool operator==(const TPoly& a, const TPoly& b) { return a.c_ == b.c_; }

  std::vector<std::string> serialize() const;
  std::string to_string() const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

inline bool is_zero(const TPoly& p) { return p.is_zero(); }

}  // namespace ainf
