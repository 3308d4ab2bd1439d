#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ainf {

/// Exact rational scalar. GMP keeps values canonical after every arithmetic
/// operation; values built from text are canonicalized by parse_scalar.
using Scalar = mpq_class;

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed text or
/// a zero denominator.
Scalar parse_scalar(std::string_view text);

/// "p" for integers, "p/q" otherwise, always reduced with q > 0.
std::string format_scalar(const Scalar& value);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

/// Element of the Gaussian rationals Q(i).
struct GaussianRational {
  Scalar re;
  Scalar im;

  GaussianRational() = default;
  GaussianRational(Scalar real, Scalar imag = 0) : re(std::move(real)), im(std::move(imag)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {Scalar(a.re * b.re - a.im * b.im), Scalar(a.re * b.im + a.im * b.re)};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

}  // namespace ainf
