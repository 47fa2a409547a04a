#pragma once

// Exact scalar arithmetic: arbitrary-precision rationals (GMP) and
// Gaussian rationals a + b i with rational a, b.

#include <complex>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace epspectra {

/// Arbitrary-precision rational. GMP keeps it canonical (den > 0, reduced).
using Rational = mpq_class;

/// Parses "3", "-0.125", "1.5e-3", "7/11" or "0.1/11" into an exact rational.
/// Decimal digits are taken literally, so "0.1" is exactly 1/10.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "num/den" with an explicit denominator (den = 1 for integers).
std::string to_fraction_string(const Rational& q);

double to_double(const Rational& q);
long double to_long_double(const Rational& q);

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  /// Adds a*b in place; avoids the temporaries of `x += a * b`.
  void add_product(const GaussianRational& a, const GaussianRational& b);

  std::complex<double> to_complex() const { return {to_double(re_), to_double(im_)}; }
  std::complex<long double> to_complex_ld() const {
    return {to_long_double(re_), to_long_double(im_)};
  }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

inline GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
inline GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
inline GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
inline GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

/// "a/b" for real values, "(a/b + c/d*i)" otherwise.
std::string to_string(const GaussianRational& z);
std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace epspectra
