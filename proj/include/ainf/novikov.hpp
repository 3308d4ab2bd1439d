#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ainf/scalar.hpp"

namespace ainf {

/// Truncated formal sum of coefficient * T^energy with nonnegative rational
/// energies. With a cutoff E every stored energy is strictly below E, which
/// realizes the quotient by the ideal of terms with energy >= E.
class NovikovElement {
 public:
  using Terms = std::map<Scalar, Scalar>;

  explicit NovikovElement(std::optional<Scalar> cutoff = std::nullopt);
  static NovikovElement monomial(const Scalar& coeff, const Scalar& energy,
                                 std::optional<Scalar> cutoff = std::nullopt);

  const Terms& terms() const { return terms_; }
  const std::optional<Scalar>& cutoff() const { return cutoff_; }
  bool is_zero() const { return terms_.empty(); }
  /// Lowest stored energy; empty for zero.
  std::optional<Scalar> valuation() const;
  Scalar coefficient(const Scalar& energy) const;

  /// Adds coeff * T^energy, dropping it when it falls at or above the cutoff.
  void add_term(const Scalar& energy, const Scalar& coeff);

  NovikovElement scaled(const Scalar& factor) const;
  /// Multiplication by T^energy.
  NovikovElement shifted(const Scalar& energy) const;
  /// Re-truncates at a (possibly smaller) cutoff; nullopt keeps the current one.
  NovikovElement truncated(const Scalar& cutoff) const;
  NovikovElement with_cutoff(std::optional<Scalar> cutoff) const;

  NovikovElement& operator+=(const NovikovElement& other);
  NovikovElement& operator-=(const NovikovElement& other);
  friend NovikovElement operator+(NovikovElement a, const NovikovElement& b) { return a += b; }
  friend NovikovElement operator-(NovikovElement a, const NovikovElement& b) { return a -= b; }
  friend NovikovElement operator*(const NovikovElement& a, const NovikovElement& b);
  friend NovikovElement operator-(const NovikovElement& a) { return a.scaled(-1); }
  friend bool operator==(const NovikovElement& a, const NovikovElement& b) {
    return a.cutoff_ == b.cutoff_ && a.terms_ == b.terms_;
  }

  /// [[energy, coeff], ...] in increasing energy, both as "p/q" strings.
  std::vector<std::pair<std::string, std::string>> serialize() const;
  std::string to_string() const;

 private:
  void require_same_mode(const NovikovElement& other) const;

  Terms terms_;
  std::optional<Scalar> cutoff_;
};

enum class NovikovOp { Add, Mul };

/// Ring operation on two elements sharing a truncation mode; throws
/// std::invalid_argument on mismatched modes.
NovikovElement nov_arith(const NovikovElement& x, const NovikovElement& y, NovikovOp op);

}  // namespace ainf
