#pragma once

// Exact characteristic polynomials by the Faddeev-LeVerrier recursion.
//
// Normalization: chi(lambda) = -sum_{k=0..M} p_{M-k} lambda^k with p_0 = -1,
// so the monic det(lambda I - H) has coefficient -p_{M-k} at lambda^k.

#include <string>
#include <vector>

#include "epspectra/operators.hpp"
#include "epspectra/param_poly.hpp"

namespace epspectra {

struct CharPoly {
  std::size_t dim = 0;
  /// p[0..dim], p[0] = -1.
  std::vector<ParamPoly> p;
  /// s[k] = Tr(H^k) for k = 1..dim; s[0] is unused and zero.
  std::vector<ParamPoly> s;

  /// Coefficient of lambda^k in det(lambda I - H), k = 0..dim.
  ParamPoly monic(std::size_t k) const;
};

/// Throws std::invalid_argument for float or non-square input.
CharPoly faddeev_leverrier(const OperatorMatrix& matrix);
CharPoly faddeev_leverrier(const ExactMatrix& matrix);

/// Power sums recomputed from p via Newton's identities,
/// s_k = k p_k + sum_{j<k} s_j p_{k-j}. Index 0 unused.
std::vector<ParamPoly> power_sums_from_coefficients(const std::vector<ParamPoly>& p);

/// Per k, the observed (j, coefficient) pairs with exponent k - 2j.
struct TraceStructureReport {
  struct Entry {
    int j;
    GaussianRational coeff;
  };
  std::vector<std::vector<Entry>> s_terms;
  std::vector<std::vector<Entry>> p_terms;
};

/// Checks that every monomial of s_k and p_k has parameter exponent k - 2j
/// with 0 <= j <= floor(k/3). A violation throws std::logic_error: it can only
/// come from an arithmetic bug or a charpoly of the wrong model.
TraceStructureReport verify_trace_structure(const CharPoly& cp);

/// True iff every coefficient of every p_k is real.
bool realness_check(const CharPoly& cp);

/// Charpoly with a constant substituted for the formal parameter.
CharPoly substitute(const CharPoly& cp, const GaussianRational& value);

/// One line per coefficient, "p[k] = ..." for k = 0..dim.
std::string format_coefficients(const CharPoly& cp, std::string_view variable = "c");
/// One line per power, "q[k] = ..." where q[k] multiplies lambda^k in
/// det(lambda I - H), k = dim down to 0.
std::string format_monic(const CharPoly& cp, std::string_view variable = "c");

}  // namespace epspectra
