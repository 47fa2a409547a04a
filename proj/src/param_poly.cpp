#include "epspectra/param_poly.hpp"

#include <algorithm>
#include <sstream>

namespace epspectra {

ParamPoly::ParamPoly(GaussianRational constant) {
  if (!constant.is_zero()) terms_.push_back({0, std::move(constant)});
}

ParamPoly ParamPoly::monomial(GaussianRational coeff, int exponent) {
  ParamPoly p;
  if (!coeff.is_zero()) p.terms_.push_back({exponent, std::move(coeff)});
  return p;
}

GaussianRational ParamPoly::coefficient(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.exponent < e; });
  if (it != terms_.end() && it->exponent == exponent) return it->coeff;
  return {};
}

bool ParamPoly::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff.is_real(); });
}

void ParamPoly::trim() {
  std::erase_if(terms_, [](const Term& t) { return t.coeff.is_zero(); });
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->exponent < b->exponent)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exponent < a->exponent) {
      merged.push_back(*b++);
    } else {
      Term t{a->exponent, std::move(a->coeff)};
      t.coeff += b->coeff;
      if (!t.coeff.is_zero()) merged.push_back(std::move(t));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) { return *this += -o; }

ParamPoly& ParamPoly::operator*=(const GaussianRational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= s;
  return *this;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  const int lo = a.terms_.front().exponent + b.terms_.front().exponent;
  const int hi = a.degree() + b.degree();
  std::vector<GaussianRational> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      dense[static_cast<std::size_t>(ta.exponent + tb.exponent - lo)].add_product(ta.coeff, tb.coeff);
    }
  }
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (!dense[i].is_zero()) r.terms_.push_back({lo + static_cast<int>(i), std::move(dense[i])});
  }
  return r;
}

bool operator==(const ParamPoly& a, const ParamPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exponent != b.terms_[i].exponent || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  }
  return true;
}

GaussianRational ParamPoly::evaluate(const GaussianRational& x) const {
  GaussianRational acc;
  int current = degree();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    for (; current > it->exponent; --current) acc *= x;
    acc += it->coeff;
  }
  for (; current > 0; --current) acc *= x;
  return acc;
}

std::complex<long double> ParamPoly::evaluate(std::complex<long double> x) const {
  std::complex<long double> acc = 0;
  int current = degree();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    for (; current > it->exponent; --current) acc *= x;
    acc += it->coeff.to_complex_ld();
  }
  for (; current > 0; --current) acc *= x;
  return acc;
}

std::optional<LowestPower> lowest_power(const ParamPoly& p) {
  if (p.is_zero()) return std::nullopt;
  const auto& t = p.terms().front();
  return LowestPower{t.exponent, t.coeff};
}

std::string to_string(const ParamPoly& p, std::string_view variable) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << to_string(t.coeff) << " * " << variable << '^' << t.exponent;
  }
  return os.str();
}

}  // namespace epspectra
