#include "epspectra/charpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace epspectra {

namespace {

// Trace of a*b without forming the product.
ParamPoly trace_of_product(const ExactMatrix& a, const ExactMatrix& b) {
  ParamPoly t;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero() || b(k, i).is_zero()) continue;
      t += a(i, k) * b(k, i);
    }
  return t;
}

ParamPoly trace(const ExactMatrix& a) {
  ParamPoly t;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

bool exponent_allowed(int k, int exponent) {
  const int twice_j = k - exponent;
  if (twice_j < 0 || twice_j % 2 != 0) return false;
  return twice_j / 2 <= k / 3;
}

std::vector<TraceStructureReport::Entry> check_structure(const ParamPoly& poly, int k, const char* name) {
  std::vector<TraceStructureReport::Entry> entries;
  for (const auto& t : poly.terms()) {
    if (!exponent_allowed(k, t.exponent)) {
      throw std::logic_error(std::string("trace structure violated: ") + name + "[" + std::to_string(k) +
                             "] has a term of order " + std::to_string(t.exponent));
    }
    entries.push_back({(k - t.exponent) / 2, t.coeff});
  }
  return entries;
}

}  // namespace

ParamPoly CharPoly::monic(std::size_t k) const {
  if (k > dim) throw std::out_of_range("monic coefficient index beyond degree");
  return -p[dim - k];
}

CharPoly faddeev_leverrier(const OperatorMatrix& matrix) {
  if (!matrix.is_exact()) throw std::invalid_argument("faddeev_leverrier needs exact matrix entries");
  return faddeev_leverrier(matrix.exact());
}

CharPoly faddeev_leverrier(const ExactMatrix& h) {
  if (!h.is_square() || h.rows() == 0) throw std::invalid_argument("faddeev_leverrier needs a nonempty square matrix");
  const std::size_t m = h.rows();
  CharPoly cp;
  cp.dim = m;
  cp.s.assign(m + 1, ParamPoly());
  cp.p.assign(m + 1, ParamPoly());
  cp.p[0] = ParamPoly(-1L);

  ExactMatrix power = h;
  cp.s[1] = trace(h);
  for (std::size_t k = 2; k <= m; ++k) {
    if (k == m) {
      cp.s[k] = trace_of_product(power, h);
    } else {
      power = power * h;
      cp.s[k] = trace(power);
    }
  }
  for (std::size_t k = 1; k <= m; ++k) {
    ParamPoly acc;
    for (std::size_t j = 1; j <= k; ++j) acc += cp.s[j] * cp.p[k - j];
    acc *= GaussianRational(Rational(-1, static_cast<long>(k)));
    cp.p[k] = std::move(acc);
  }
  return cp;
}

std::vector<ParamPoly> power_sums_from_coefficients(const std::vector<ParamPoly>& p) {
  std::vector<ParamPoly> s(p.size());
  for (std::size_t k = 1; k < p.size(); ++k) {
    ParamPoly acc = p[k] * GaussianRational(static_cast<long>(k));
    for (std::size_t j = 1; j < k; ++j) acc += s[j] * p[k - j];
    s[k] = std::move(acc);
  }
  return s;
}

TraceStructureReport verify_trace_structure(const CharPoly& cp) {
  TraceStructureReport report;
  report.s_terms.resize(cp.dim + 1);
  report.p_terms.resize(cp.dim + 1);
  for (std::size_t k = 1; k <= cp.dim; ++k) {
    report.s_terms[k] = check_structure(cp.s[k], static_cast<int>(k), "s");
    report.p_terms[k] = check_structure(cp.p[k], static_cast<int>(k), "p");
  }
  return report;
}

bool realness_check(const CharPoly& cp) {
  for (const auto& poly : cp.p)
    if (!poly.is_real()) return false;
  return true;
}

CharPoly substitute(const CharPoly& cp, const GaussianRational& value) {
  CharPoly r = cp;
  for (auto& poly : r.p) poly = ParamPoly(poly.evaluate(value));
  for (auto& poly : r.s) poly = ParamPoly(poly.evaluate(value));
  return r;
}

std::string format_coefficients(const CharPoly& cp, std::string_view variable) {
  std::ostringstream os;
  for (std::size_t k = 0; k <= cp.dim; ++k) os << "p[" << k << "] = " << to_string(cp.p[k], variable) << '\n';
  return os.str();
}

std::string format_monic(const CharPoly& cp, std::string_view variable) {
  std::ostringstream os;
  for (std::size_t k = cp.dim + 1; k-- > 0;) os << "q[" << k << "] = " << to_string(cp.monic(k), variable) << '\n';
  return os.str();
}

}  // namespace epspectra
