#pragma once

// Floating-point spectra of the model, parameter sweeps, branch matching and
// PT classification.

#include <complex>
#include <functional>
#include <vector>

#include "epspectra/operators.hpp"

namespace epspectra {

using Complex = std::complex<double>;

struct Spectrum {
  ModelParams params;
  /// Sorted by real part, then imaginary part.
  std::vector<Complex> eigenvalues;
};

struct Trajectory {
  int branch = 0;
  std::vector<double> param;
  std::vector<Complex> values;
};

struct Classification {
  int real_count = 0;
  int conjugate_pair_count = 0;
  double imag_tolerance = 0.0;
};

enum class SweepVariable { gamma, c };

/// Eigenvalues of a float operator matrix (general complex path). Throws
/// std::invalid_argument for exact input.
std::vector<Complex> eigenvalues(const OperatorMatrix& matrix);

/// Eigenvalues of H(params). pert_power = 2 goes through the real similar
/// form of `pt_real_form`, which keeps conjugate pairs exact and stays
/// accurate near the order-(N+1) degeneracy; other powers use the complex
/// path on the orthonormal-basis matrix. NumericalError on non-convergence.
Spectrum compute_spectrum(const ModelParams& params);

/// lambda_n = n sqrt(v^2 - gamma^2), n = -N, -N+2, ..., N; the root is real
/// for |gamma| <= |v| and positive imaginary otherwise. Requires c = 0.
std::vector<Complex> analytic_c0_spectrum(const ModelParams& params);

/// max(1, largest entry modulus of the orthonormal-basis H).
double spectral_scale(const ModelParams& params);

/// One Spectrum per grid point; points are independent and evaluated on up to
/// `threads` threads. Errors name the failing grid point.
std::vector<Spectrum> sweep(const ModelParams& base, SweepVariable vary, const std::vector<double>& grid,
                            int threads = 1);

ModelParams with_parameter(ModelParams params, SweepVariable vary, double value);

/// Minimum-cost perfect matching on a square cost matrix (Hungarian method).
/// Returns, for each row, the assigned column.
std::vector<std::size_t> optimal_assignment(const std::vector<std::vector<double>>& cost);

/// Permutation of `next` that follows `previous` with minimal total distance.
std::vector<Complex> match_to(const std::vector<Complex>& previous, const std::vector<Complex>& next);

/// Largest distance between two equally sized sets under optimal matching.
double matched_distance(const std::vector<Complex>& a, const std::vector<Complex>& b);

struct BranchMatch {
  std::vector<Trajectory> trajectories;
  /// Step i joins grid points i and i+1.
  std::vector<std::size_t> flagged_steps;
};

/// Jump flag: the largest matched jump exceeds `ratio` times the median jump.
/// Jumps below `floor` are never flagged.
struct JumpRule {
  double ratio = 10.0;
  double floor = 1e-12;
};

bool step_is_flagged(const std::vector<Complex>& from, const std::vector<Complex>& to, const JumpRule& rule = {});

/// Optimal-assignment continuation of the eigenvalue sets across the grid.
BranchMatch match_branches(const std::vector<double>& grid, const std::vector<std::vector<Complex>>& values,
                           const JumpRule& rule = {});
BranchMatch match_branches(const std::vector<Spectrum>& spectra, SweepVariable vary, const JumpRule& rule = {});

struct RefinedSweep {
  std::vector<double> grid;
  std::vector<std::vector<Complex>> values;
  BranchMatch match;
  /// Flagged steps left after the refinement limit.
  std::vector<std::size_t> unresolved_steps;
  int levels_used = 0;
};

/// Dyadic refinement: every flagged step gets its midpoint inserted, then the
/// sweep is re-matched, for at most `max_levels` rounds.
RefinedSweep refine(const std::function<std::vector<Complex>(double)>& compute, std::vector<double> grid,
                    int max_levels = 12, const JumpRule& rule = {});

/// Eigenvalues with |Im| <= imag_tol are real; the rest must pair under
/// conjugation within max(imag_tol, 1e-9 scale). Throws NumericalError when
/// a non-real eigenvalue has no conjugate partner.
Classification classify(const std::vector<Complex>& eigenvalues, double imag_tol, double scale = 1.0);
Classification classify(const Spectrum& spectrum);

}  // namespace epspectra
