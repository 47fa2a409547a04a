#pragma once

// Dense nonsymmetric eigenvalues: balancing, Householder reduction to upper
// Hessenberg form, then shifted QR. Real input uses the Francis double-shift
// iteration, so complex eigenvalues come out as exact conjugate pairs; complex
// input uses single-shift QR with a Wilkinson shift.

#include <complex>
#include <vector>

#include "epspectra/matrix.hpp"

namespace epspectra {

/// Diagonal similarity that equalizes off-diagonal row and column 1-norms to
/// within 0.1%. Eigenvalues are unchanged up to one rounding per entry.
void balance(RealMatrix& a);
void balance(ComplexMatrix& a);

/// In-place orthogonal (unitary) similarity to upper Hessenberg form;
/// entries below the first subdiagonal are set to zero.
void reduce_to_hessenberg(RealMatrix& a);
void reduce_to_hessenberg(ComplexMatrix& a);

/// Eigenvalues of an upper Hessenberg matrix (destroyed). Throws
/// NumericalError when the iteration budget (30 sweeps per eigenvalue) runs out.
std::vector<std::complex<double>> hessenberg_eigenvalues(RealMatrix& h);
std::vector<std::complex<double>> hessenberg_eigenvalues(ComplexMatrix& h);

/// Full pipeline: balance, reduce, iterate. Result is sorted by real part,
/// then imaginary part.
std::vector<std::complex<double>> eigenvalues(const RealMatrix& a);
std::vector<std::complex<double>> eigenvalues(const ComplexMatrix& a);

/// Deterministic order: ascending real part, then ascending imaginary part.
void sort_eigenvalues(std::vector<std::complex<double>>& values);

/// Roots of sum_k coeffs[k] x^k from the eigenvalues of the balanced
/// companion matrix, each polished by Newton steps in long double. Leading
/// zero coefficients are dropped. Throws std::invalid_argument for the zero
/// polynomial. Result is sorted as for eigenvalues.
std::vector<std::complex<double>> polynomial_roots(const std::vector<std::complex<long double>>& coeffs);

/// Horner evaluation in long double.
std::complex<long double> evaluate_polynomial(const std::vector<std::complex<long double>>& coeffs,
                                              std::complex<long double> x);

}  // namespace epspectra
