#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ainf/scalar.hpp"

namespace ainf {

/// Polynomial in q with rational coefficients, lowest degree first, trimmed.
class QPoly {
 public:
  QPoly() = default;
  QPoly(Scalar c);  // NOLINT: constants convert implicitly
  static QPoly monomial(const Scalar& c, int exponent);

  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for zero.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Scalar& leading() const { return coeffs_.back(); }
  /// c q^e with c != 0.
  bool is_monomial() const;
  /// Lowest exponent with nonzero coefficient; -1 for zero.
  int order() const;
  QPoly monic() const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator-(const QPoly& a) { return QPoly() - a; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Quotient and remainder; throws std::domain_error on division by zero.
  std::pair<QPoly, QPoly> divmod(const QPoly& divisor) const;
  /// Exact quotient; throws std::logic_error if the division leaves a remainder.
  QPoly exact_div(const QPoly& divisor) const;
  std::string to_string() const;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

inline bool is_zero(const QPoly& p) { return p.is_zero(); }

}  // namespace ainf
