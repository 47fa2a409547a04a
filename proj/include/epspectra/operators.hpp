#pragma once

// Angular momentum operators of the spin-l = N/2 representation and the
// PT-symmetric two-mode Bose-Hubbard Hamiltonians built from them.
//
// Basis ordering: rows/columns are indexed by n = l + m = 0..N ascending,
// so n = 0 is m = -l. Two bases are supported:
//   orthonormal  |l,m>            ladder entries are square roots (float only)
//   monomial     xi^n             ladder entries are integers (exact or float)
// They differ by the diagonal similarity diag(sqrt(n! (N-n)!)), so spectra
// and characteristic polynomials agree.

#include <variant>

#include "epspectra/exact.hpp"
#include "epspectra/matrix.hpp"
#include "epspectra/param_poly.hpp"

namespace epspectra {

using ExactMatrix = Matrix<ParamPoly>;

enum class Ladder { plus, minus };
enum class Axis { x, y, z };
enum class Basis { orthonormal, monomial };

class AngularMomentumRep {
 public:
  /// Throws UsageError for particles < 1.
  explicit AngularMomentumRep(int particles);

  int particles() const { return particles_; }
  std::size_t dim() const { return static_cast<std::size_t>(particles_) + 1; }
  /// l = N/2 exactly.
  Rational l() const {
    Rational l(particles_, 2);
    l.canonicalize();
    return l;
  }

 private:
  int particles_;
};

/// H = -2 i gamma L_z + 2 v L_x + 2 c L_z^2 (pert_power = 2), or with the
/// generalized perturbation 2 c L_z^k for other k.
struct ModelParams {
  int particles = 1;
  double gamma = 0.0;
  double v = 1.0;
  double c = 0.0;
  int pert_power = 2;
};

/// Float or exact matrix representation of an operator. Exact entries are
/// polynomials in one formal parameter; float entries are complex doubles.
class OperatorMatrix {
 public:
  OperatorMatrix(ComplexMatrix m, Basis basis) : entries_(std::move(m)), basis_(basis) {}
  OperatorMatrix(ExactMatrix m, Basis basis) : entries_(std::move(m)), basis_(basis) {}

  bool is_exact() const { return std::holds_alternative<ExactMatrix>(entries_); }
  Basis basis() const { return basis_; }
  std::size_t dim() const;

  /// Throws std::logic_error when the kind does not match.
  const ComplexMatrix& numeric() const;
  const ExactMatrix& exact() const;

  /// Float entries; exact entries are evaluated at `parameter`.
  ComplexMatrix to_numeric(double parameter = 0.0) const;

 private:
  std::variant<ComplexMatrix, ExactMatrix> entries_;
  Basis basis_;
};

OperatorMatrix build_ladder(const AngularMomentumRep& rep, Ladder which, Basis basis);
OperatorMatrix build_cartesian(const AngularMomentumRep& rep, Axis axis, Basis basis);

/// Float Hamiltonian for the given parameters; pert_power must be 2.
/// Orthonormal basis gives a complex symmetric tridiagonal matrix.
OperatorMatrix build_hamiltonian(const ModelParams& params, Basis basis);

/// Exact monomial-basis Hamiltonian H = 2 eps L_z + 2 v L_x + 2 c L_z^2 with
/// the interaction strength c as the formal parameter. The PT-symmetric
/// model has eps = -i gamma.
OperatorMatrix build_exact_hamiltonian(int particles, const GaussianRational& epsilon, const Rational& v);
inline OperatorMatrix build_exact_pt_hamiltonian(int particles, const Rational& gamma, const Rational& v) {
  return build_exact_hamiltonian(particles, GaussianRational(Rational(0), Rational(-gamma)), v);
}

/// Rotated Hamiltonian at gamma = v with perturbation 2 c L_z^k:
///   2 v L_- + 2 (-i/2)^k c (L_+ - L_-)^k,
/// which for k = 2 is 2 v L_- - (c/2)(L_+ - L_-)^2. Exact, monomial basis,
/// formal parameter c.
OperatorMatrix build_rotated_hamiltonian(int particles, const Rational& v, int pert_power = 2);

/// Rotated c = 0 Hamiltonian with detuning Delta = gamma - v as the formal
/// parameter: 2 v L_- - Delta (L_+ - L_-).
OperatorMatrix build_detuned_hamiltonian(int particles, const Rational& v);

/// Exact (L_+ - L_-)^k in the monomial basis (constant entries).
ExactMatrix ladder_difference_power(const AngularMomentumRep& rep, int power);

/// Real matrix unitarily similar to the orthonormal-basis H(params):
///   v (L_+ + L_-) - gamma (L_+ - L_-) - (c/2) (L_+ - L_-)^2,
/// obtained by the rotation L_z -> L_y about the x axis. Real entries make
/// the PT structure (real or conjugate-pair eigenvalues) explicit; at
/// gamma = v, c = 0 it is exactly strictly upper triangular. pert_power = 2.
RealMatrix pt_real_form(const ModelParams& params);

/// Standard involutory permutation: ones on the anti-diagonal.
RealMatrix parity_matrix(std::size_t dim);

/// Exact matrix with constant entries substituted for the formal parameter.
ExactMatrix substitute(const ExactMatrix& m, const GaussianRational& value);

}  // namespace epspectra
