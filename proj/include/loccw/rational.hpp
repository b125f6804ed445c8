#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

namespace loccw {

/// Exact scalar type for everything the solver touches. GMP keeps values
/// canonical: positive denominator, gcd(|num|, den) = 1.
using Rational = mpq_class;

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

/// Strict parse of "p" or "p/q" (decimal, optional leading '-', no leading
/// zeros). Rejects q <= 0 and non-reduced fractions.
Rational rational_from_string(const std::string& text);

inline Rational rational_abs(const Rational& q) {
  return sgn(q) < 0 ? Rational(-q) : q;
}

/// Complex number with exact rational real and imaginary parts.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(long value) : re(value) {}  // NOLINT: implicit by design
  GaussianRational(const Rational& value) : re(value) {}
  GaussianRational(Rational real, Rational imag)
      : re(std::move(real)), im(std::move(imag)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GaussianRational conjugate() const { return {re, Rational(-im)}; }
  /// Squared modulus re^2 + im^2; a Rational >= 0, zero iff *this is zero.
  Rational norm2() const { return re * re + im * im; }

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
};

inline bool operator==(const GaussianRational& x, const GaussianRational& y) {
  return x.re == y.re && x.im == y.im;
}
inline bool operator!=(const GaussianRational& x, const GaussianRational& y) {
  return !(x == y);
}

inline GaussianRational operator+(GaussianRational x, const GaussianRational& y) {
  x += y;
  return x;
}
inline GaussianRational operator-(GaussianRational x, const GaussianRational& y) {
  x -= y;
  return x;
}
inline GaussianRational operator-(const GaussianRational& x) {
  return {Rational(-x.re), Rational(-x.im)};
}
inline GaussianRational operator*(const GaussianRational& x, const GaussianRational& y) {
  return {Rational(x.re * y.re - x.im * y.im), Rational(x.re * y.im + x.im * y.re)};
}
inline GaussianRational operator*(const GaussianRational& x, const Rational& s) {
  return {Rational(x.re * s), Rational(x.im * s)};
}
inline GaussianRational operator*(const Rational& s, const GaussianRational& x) {
  return x * s;
}
inline GaussianRational operator/(const GaussianRational& x, const Rational& s) {
  return {Rational(x.re / s), Rational(x.im / s)};
}

/// Diagnostic form, e.g. "1", "-1/2", "3i", "1+2i".
std::string to_string(const GaussianRational& z);

}  // namespace loccw
