#include "epspectra/exact.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace epspectra {

namespace {

Rational parse_decimal(std::string_view text, std::string_view whole) {
  auto fail = [&] { throw std::invalid_argument("not an exact decimal: '" + std::string(whole) + "'"); };
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string digits;
  long scale = 0;  // value = digits * 10^scale
  bool any_digit = false;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    digits.push_back(text[pos++]);
    any_digit = true;
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      digits.push_back(text[pos++]);
      --scale;
      any_digit = true;
    }
  }
  if (!any_digit) fail();
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    bool exp_negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      exp_negative = text[pos] == '-';
      ++pos;
    }
    std::size_t start = pos;
    long exponent = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      exponent = exponent * 10 + (text[pos++] - '0');
      if (exponent > 100000) fail();
    }
    if (pos == start) fail();
    scale += exp_negative ? -exponent : exponent;
  }
  if (pos != text.size()) fail();

  mpz_class numerator(digits, 10);
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  Rational value = scale < 0 ? Rational(numerator, power) : Rational(numerator * power);
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text, text);
  Rational num = parse_decimal(text.substr(0, slash), text);
  Rational den = parse_decimal(text.substr(slash + 1), text);
  if (sgn(den) == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return num / den;
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) {
  // mpq_get_d truncates. Take a 62-bit quotient, fold the remainder into a
  // sticky bit, and let the integer-to-double conversion round to nearest.
  if (q == 0) return 0.0;
  mpz_class a = abs(q.get_num());
  mpz_class b = q.get_den();
  const long shift = 62 - (static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2)) -
                           static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 2)));
  if (shift >= 0) {
    a <<= shift;
  } else {
    b <<= -shift;
  }
  mpz_class quot, rem;
  mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  std::uint64_t bits = mpz_get_ui(quot.get_mpz_t());
  if (rem != 0) bits |= 1;
  const double mag = std::ldexp(static_cast<double>(bits), static_cast<int>(-shift));
  return q < 0 ? -mag : mag;
}

long double to_long_double(const Rational& q) {
  // mpq_get_d truncates to double; split off the integer part to keep more bits.
  mpz_class whole = q.get_num() / q.get_den();
  Rational frac = q - Rational(whole);
  return static_cast<long double>(whole.get_d()) +
         static_cast<long double>(mpz_class(frac.get_num() * (mpz_class(1) << 64) / frac.get_den()).get_d()) /
             18446744073709551616.0L;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("GaussianRational division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
  Rational re = (re_ * o.re_ + im_ * o.im_) / norm;
  Rational im = (im_ * o.re_ - re_ * o.im_) / norm;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

void GaussianRational::add_product(const GaussianRational& a, const GaussianRational& b) {
  const bool a_real = sgn(a.im_) == 0;
  const bool b_real = sgn(b.im_) == 0;
  if (a_real && b_real) {
    re_ += a.re_ * b.re_;
    return;
  }
  if (a_real) {
    re_ += a.re_ * b.re_;
    im_ += a.re_ * b.im_;
    return;
  }
  if (b_real) {
    re_ += a.re_ * b.re_;
    im_ += a.im_ * b.re_;
    return;
  }
  re_ += a.re_ * b.re_ - a.im_ * b.im_;
  im_ += a.re_ * b.im_ + a.im_ * b.re_;
}

std::string to_string(const GaussianRational& z) {
  if (z.is_real()) return to_fraction_string(z.re());
  std::ostringstream os;
  os << '(' << to_fraction_string(z.re());
  if (sgn(z.im()) < 0) {
    os << " - " << to_fraction_string(-z.im()) << "*i)";
  } else {
    os << " + " << to_fraction_string(z.im()) << "*i)";
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << to_string(z); }

}  // namespace epspectra
