#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "epspectra/exact.hpp"

namespace epspectra {

/// Univariate polynomial in one formal parameter (the interaction strength c,
/// or the detuning Δ) with Gaussian-rational coefficients.
///
/// Terms are kept sorted by exponent with no zero coefficients stored, so the
/// zero polynomial has no terms and `lowest_term` is a plain lookup.
class ParamPoly {
 public:
  struct Term {
    int exponent;
    GaussianRational coeff;
  };

  ParamPoly() = default;
  ParamPoly(GaussianRational constant);  // NOLINT(google-explicit-constructor)
  ParamPoly(long constant) : ParamPoly(GaussianRational(constant)) {}  // NOLINT
  static ParamPoly monomial(GaussianRational coeff, int exponent);

  bool is_zero() const { return terms_.empty(); }
  /// Highest stored exponent; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.back().exponent; }
  std::span<const Term> terms() const { return terms_; }
  GaussianRational coefficient(int exponent) const;

  /// True iff every coefficient has zero imaginary part.
  bool is_real() const;

  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const GaussianRational& s);
  ParamPoly operator-() const;

  /// Exact value at a rational point of the parameter.
  GaussianRational evaluate(const GaussianRational& x) const;
  std::complex<long double> evaluate(std::complex<long double> x) const;

  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend bool operator==(const ParamPoly& a, const ParamPoly& b);

 private:
  void trim();
  std::vector<Term> terms_;
};

inline ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
inline ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
inline ParamPoly operator*(ParamPoly a, const GaussianRational& s) { return a *= s; }

/// Lowest-order term of a nonzero polynomial, as used for Newton diagram
/// points: `exponent` is the smallest stored power, `coeff` its coefficient.
struct LowestPower {
  int exponent;
  GaussianRational coeff;
};

/// Empty for the zero polynomial (an absent diagram point).
std::optional<LowestPower> lowest_power(const ParamPoly& p);

/// Text form used by the charpoly output: terms "num/den * c^e" joined by
/// " + ", ascending in e; "0" for the zero polynomial.
std::string to_string(const ParamPoly& p, std::string_view variable = "c");

}  // namespace epspectra
