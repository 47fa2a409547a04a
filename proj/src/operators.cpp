#include "epspectra/operators.hpp"

#include "epspectra/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace epspectra {

namespace {

using cd = std::complex<double>;

// Float ladder matrices; entries per basis convention (see header).
RealMatrix float_ladder(int N, Ladder which, Basis basis) {
  const auto dim = static_cast<std::size_t>(N) + 1;
  RealMatrix m(dim, dim);
  for (int n = 0; n < N; ++n) {
    const auto i = static_cast<std::size_t>(n);
    if (which == Ladder::plus) {
      // L_+ : n -> n+1
      m(i + 1, i) = basis == Basis::monomial ? double(N - n) : std::sqrt(double(N - n) * double(n + 1));
    } else {
      // L_- : n+1 -> n
      m(i, i + 1) = basis == Basis::monomial ? double(n + 1) : std::sqrt(double(n + 1) * double(N - n));
    }
  }
  return m;
}

ExactMatrix exact_ladder(int N, Ladder which) {
  const auto dim = static_cast<std::size_t>(N) + 1;
  ExactMatrix m(dim, dim);
  for (int n = 0; n < N; ++n) {
    const auto i = static_cast<std::size_t>(n);
    if (which == Ladder::plus) {
      m(i + 1, i) = ParamPoly(long(N - n));
    } else {
      m(i, i + 1) = ParamPoly(long(n + 1));
    }
  }
  return m;
}

// (-i)^k / 2^k
GaussianRational minus_i_half_power(int k) {
  Rational mag(1);
  mag /= Rational(mpz_class(1) << static_cast<unsigned long>(k));
  switch (k % 4) {
    case 0:
      return {mag, Rational(0)};
    case 1:
      return {Rational(0), Rational(-mag)};
    case 2:
      return {Rational(-mag), Rational(0)};
    default:
      return {Rational(0), mag};
  }
}

ExactMatrix exact_diff_power(int N, int power) {
  if (power < 0) throw std::invalid_argument("negative operator power");
  const auto dim = static_cast<std::size_t>(N) + 1;
  ExactMatrix diff = exact_ladder(N, Ladder::plus) - exact_ladder(N, Ladder::minus);
  ExactMatrix result = ExactMatrix::identity(dim, ParamPoly(1L));
  for (int p = 0; p < power; ++p) result = result * diff;
  return result;
}

}  // namespace

AngularMomentumRep::AngularMomentumRep(int particles) : particles_(particles) {
  if (particles < 1) {
    throw UsageError("particle number must be >= 1 (got " + std::to_string(particles) + ")");
  }
}

std::size_t OperatorMatrix::dim() const {
  return std::visit([](const auto& m) { return m.rows(); }, entries_);
}

const ComplexMatrix& OperatorMatrix::numeric() const {
  if (is_exact()) throw std::logic_error("operator matrix holds exact entries, float requested");
  return std::get<ComplexMatrix>(entries_);
}

const ExactMatrix& OperatorMatrix::exact() const {
  if (!is_exact()) throw std::logic_error("operator matrix holds float entries, exact requested");
  return std::get<ExactMatrix>(entries_);
}

ComplexMatrix OperatorMatrix::to_numeric(double parameter) const {
  if (!is_exact()) return numeric();
  const auto& e = exact();
  ComplexMatrix m(e.rows(), e.cols());
  const std::complex<long double> x(parameter, 0.0L);
  for (std::size_t i = 0; i < e.rows(); ++i) {
    for (std::size_t j = 0; j < e.cols(); ++j) {
      auto value = e(i, j).evaluate(x);
      m(i, j) = cd(static_cast<double>(value.real()), static_cast<double>(value.imag()));
    }
  }
  return m;
}

OperatorMatrix build_ladder(const AngularMomentumRep& rep, Ladder which, Basis basis) {
  if (basis == Basis::monomial) return {exact_ladder(rep.particles(), which), basis};
  return {to_complex(float_ladder(rep.particles(), which, basis)), basis};
}

OperatorMatrix build_cartesian(const AngularMomentumRep& rep, Axis axis, Basis basis) {
  const int N = rep.particles();
  const std::size_t dim = rep.dim();
  if (basis == Basis::monomial) {
    ExactMatrix m(dim, dim);
    if (axis == Axis::z) {
      for (std::size_t n = 0; n < dim; ++n) m(n, n) = ParamPoly(GaussianRational(Rational(long(n)) - rep.l()));
      return {m, basis};
    }
    ExactMatrix plus = exact_ladder(N, Ladder::plus);
    ExactMatrix minus = exact_ladder(N, Ladder::minus);
    if (axis == Axis::x) {
      m = plus + minus;
      m *= GaussianRational(Rational(1, 2));
    } else {
      // (L_+ - L_-) / (2i) = -(i/2)(L_+ - L_-)
      m = plus - minus;
      m *= GaussianRational(Rational(0), Rational(-1, 2));
    }
    return {m, basis};
  }
  ComplexMatrix m(dim, dim);
  if (axis == Axis::z) {
    for (std::size_t n = 0; n < dim; ++n) m(n, n) = double(n) - 0.5 * N;
    return {m, basis};
  }
  RealMatrix plus = float_ladder(N, Ladder::plus, basis);
  RealMatrix minus = float_ladder(N, Ladder::minus, basis);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      m(i, j) = axis == Axis::x ? cd(0.5 * (plus(i, j) + minus(i, j)), 0.0)
                                : cd(0.0, -0.5 * (plus(i, j) - minus(i, j)));
    }
  }
  return {m, basis};
}

OperatorMatrix build_hamiltonian(const ModelParams& params, Basis basis) {
  if (params.pert_power != 2) {
    throw std::invalid_argument("build_hamiltonian covers the L_z^2 interaction only; use build_rotated_hamiltonian");
  }
  AngularMomentumRep rep(params.particles);
  const int N = params.particles;
  const std::size_t dim = rep.dim();
  ComplexMatrix h(dim, dim);
  RealMatrix plus = float_ladder(N, Ladder::plus, basis);
  RealMatrix minus = float_ladder(N, Ladder::minus, basis);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) h(i, j) = params.v * (plus(i, j) + minus(i, j));
    const double m = double(i) - 0.5 * N;
    h(i, i) = cd(2.0 * params.c * m * m, -2.0 * params.gamma * m);
  }
  return {h, basis};
}

OperatorMatrix build_exact_hamiltonian(int particles, const GaussianRational& epsilon, const Rational& v) {
  AngularMomentumRep rep(particles);
  ExactMatrix h = exact_ladder(particles, Ladder::plus) + exact_ladder(particles, Ladder::minus);
  h *= GaussianRational(v);
  for (std::size_t n = 0; n < rep.dim(); ++n) {
    const Rational m = Rational(long(n)) - rep.l();
    ParamPoly diag(epsilon * GaussianRational(Rational(2 * m)));
    diag += ParamPoly::monomial(GaussianRational(Rational(2 * m * m)), 1);
    h(n, n) = diag;
  }
  return {h, Basis::monomial};
}

ExactMatrix ladder_difference_power(const AngularMomentumRep& rep, int power) {
  return exact_diff_power(rep.particles(), power);
}

OperatorMatrix build_rotated_hamiltonian(int particles, const Rational& v, int pert_power) {
  if (pert_power < 1) throw std::invalid_argument("perturbation power must be >= 1");
  AngularMomentumRep rep(particles);
  ExactMatrix h = exact_ladder(particles, Ladder::minus);
  h *= GaussianRational(Rational(2 * v));
  ExactMatrix pert = exact_diff_power(particles, pert_power);
  GaussianRational scale = minus_i_half_power(pert_power) * GaussianRational(2L);
  for (std::size_t i = 0; i < rep.dim(); ++i) {
    for (std::size_t j = 0; j < rep.dim(); ++j) {
      if (pert(i, j).is_zero()) continue;
      h(i, j) += ParamPoly::monomial(pert(i, j).coefficient(0) * scale, 1);
    }
  }
  return {h, Basis::monomial};
}

OperatorMatrix build_detuned_hamiltonian(int particles, const Rational& v) {
  AngularMomentumRep rep(particles);
  ExactMatrix h = exact_ladder(particles, Ladder::minus);
  h *= GaussianRational(Rational(2 * v));
  ExactMatrix diff = exact_diff_power(particles, 1);
  for (std::size_t i = 0; i < rep.dim(); ++i) {
    for (std::size_t j = 0; j < rep.dim(); ++j) {
      if (diff(i, j).is_zero()) continue;
      h(i, j) += ParamPoly::monomial(-diff(i, j).coefficient(0), 1);
    }
  }
  return {h, Basis::monomial};
}

RealMatrix pt_real_form(const ModelParams& params) {
  if (params.pert_power != 2) throw std::invalid_argument("pt_real_form covers the L_z^2 interaction only");
  AngularMomentumRep rep(params.particles);
  const int N = params.particles;
  const std::size_t dim = rep.dim();
  RealMatrix plus = float_ladder(N, Ladder::plus, Basis::orthonormal);
  RealMatrix minus = float_ladder(N, Ladder::minus, Basis::orthonormal);
  RealMatrix diff = plus - minus;
  RealMatrix diff2 = diff * diff;
  RealMatrix r(dim, dim);
  // (v - gamma) and (v + gamma) are formed first so that gamma == v gives an
  // exact zero subdiagonal.
  const double sub = params.v - params.gamma;
  const double super = params.v + params.gamma;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      r(i, j) = sub * plus(i, j) + super * minus(i, j) - 0.5 * params.c * diff2(i, j);
    }
  }
  return r;
}

RealMatrix parity_matrix(std::size_t dim) {
  RealMatrix p(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) p(i, dim - 1 - i) = 1.0;
  return p;
}

ExactMatrix substitute(const ExactMatrix& m, const GaussianRational& value) {
  ExactMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = ParamPoly(m(i, j).evaluate(value));
  return r;
}

}  // namespace epspectra
