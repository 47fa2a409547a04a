#pragma once

// Second-order exceptional points along gamma: pair-count bisection, the
// width-split detector, maps over c, the order-(N+1) point at c = 0 and the
// strong-coupling limit.

#include <optional>
#include <string>
#include <vector>

#include "epspectra/spectra.hpp"

namespace epspectra {

enum class EPMethod { pair_count_bisection, width_split_heuristic, analytic };

std::string to_string(EPMethod method);

struct EPRecord {
  double gamma = 0.0;
  double c = 0.0;
  double v = 1.0;
  int particles = 1;
  int order = 2;
  EPMethod method = EPMethod::pair_count_bisection;
  /// Width of the final bracket around gamma.
  double bracket = 0.0;
};

struct LocateOptions {
  double gamma_min = 0.0;
  /// Upper end of the scan; unset means v (N+3)/2.
  std::optional<double> gamma_max;
  int coarse_steps = 200;
  double tol = 1e-9;
  /// Classification tolerance relative to spectral_scale. Eigenvalues from
  /// the real-form solver are exactly real until a pair forms, so this only
  /// needs to absorb rounding.
  double imag_tol_rel = 1e-12;
};

/// Conjugate pairs in the spectrum of H(params).
int complex_pair_count(const ModelParams& params, double imag_tol);

/// Scans gamma on a coarse grid, bisects every change in the pair count down
/// to `tol` and emits one order-2 record per unit change, ascending in gamma.
/// Transitions closer than `tol` come out as coincident records. Requires
/// c > 0 (UsageError otherwise).
std::vector<EPRecord> locate_eps(const ModelParams& base, const LocateOptions& options = {});

/// Figure-style detector: the gamma where the two widths of a conjugate pair
/// first differ by more than `threshold`. Detections within `merge_window`
/// are reported as one record; at c = 0 the merged record has order N+1.
std::vector<EPRecord> width_split_heuristic(const ModelParams& base, double threshold = 1e-4,
                                            const LocateOptions& options = {}, double merge_window = 1e-6);

struct EPMap {
  std::vector<double> c_grid;
  /// records[i] belongs to c_grid[i], ascending in gamma.
  std::vector<std::vector<EPRecord>> records;
  /// Empty for a successful point; otherwise the error message.
  std::vector<std::string> failures;

  bool ok() const;
};

/// locate_eps at every c (independent, run on up to `threads` threads).
/// Failures are recorded per point and do not stop the map.
EPMap ep_map(const ModelParams& base, const std::vector<double>& c_grid, const LocateOptions& options = {},
             int threads = 1);

struct MotherEPReport {
  int particles = 0;
  bool power_n_nonzero = false;
  bool power_n_plus_1_zero = false;
  double max_eigenvalue_modulus = 0.0;
  double norm = 0.0;
  bool eigenvalues_ok = false;

  bool passed() const { return power_n_nonzero && power_n_plus_1_zero && eigenvalues_ok; }
};

/// At c = 0, gamma = v: exact H^(N+1) = 0 and H^N != 0 in the monomial basis,
/// and floating eigenvalues (real-form solver) below 1e-6 ||H||_max.
/// Throws NumericalError if the exact nilpotency fails.
MotherEPReport mother_ep_check(const Rational& v, int particles);

struct StrongCouplingPrediction {
  double m_z = 0.0;
  /// Unperturbed level 2 c m_z^2 is added by the caller.
  Complex e1;
  /// Set for the coupled m_z = +-1/2 pair of odd N.
  std::optional<double> gamma_infinity;
};

/// First-order corrections for c -> infinity, one per level, ascending m_z.
std::vector<StrongCouplingPrediction> strong_coupling_predictions(int particles, double v, double gamma);

struct StrongCouplingReport {
  std::vector<Complex> predicted;
  std::vector<Complex> computed;
  /// |lambda - E0 - E1| / max(|E0 + E1|, c), optimal matching.
  std::vector<double> relative_errors;
  double bound = 0.0;
  bool passed = false;
};

StrongCouplingReport strong_coupling_validation(int particles, double v, double gamma, double c);

}  // namespace epspectra
