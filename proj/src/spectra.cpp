#include "epspectra/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "epspectra/eigensolver.hpp"
#include "epspectra/errors.hpp"
#include "epspectra/parallel.hpp"

namespace epspectra {

std::vector<Complex> eigenvalues(const OperatorMatrix& matrix) {
  if (matrix.is_exact()) throw std::invalid_argument("eigenvalues needs a float operator matrix");
  return epspectra::eigenvalues(matrix.numeric());
}

Spectrum compute_spectrum(const ModelParams& params) {
  Spectrum s{params, {}};
  try {
    if (params.pert_power == 2) {
      s.eigenvalues = epspectra::eigenvalues(pt_real_form(params));
    } else {
      // H = -2i gamma L_z + 2 v L_x + 2 c L_z^k, orthonormal basis.
      AngularMomentumRep rep(params.particles);
      ComplexMatrix h = build_hamiltonian({params.particles, params.gamma, params.v, 0.0, 2}, Basis::orthonormal).numeric();
      for (std::size_t n = 0; n < rep.dim(); ++n) {
        const double m = double(n) - 0.5 * params.particles;
        h(n, n) += 2.0 * params.c * std::pow(m, params.pert_power);
      }
      s.eigenvalues = epspectra::eigenvalues(h);
    }
  } catch (const NumericalError& e) {
    std::ostringstream os;
    os << e.what() << " at N=" << params.particles << " gamma=" << params.gamma << " v=" << params.v
       << " c=" << params.c;
    throw NumericalError(os.str());
  }
  return s;
}

std::vector<Complex> analytic_c0_spectrum(const ModelParams& params) {
  if (params.c != 0.0) throw std::invalid_argument("analytic_c0_spectrum requires c = 0");
  const double d = params.v * params.v - params.gamma * params.gamma;
  const Complex root = d >= 0.0 ? Complex(std::sqrt(d), 0.0) : Complex(0.0, std::sqrt(-d));
  std::vector<Complex> values;
  for (int n = -params.particles; n <= params.particles; n += 2) values.push_back(double(n) * root);
  sort_eigenvalues(values);
  return values;
}

double spectral_scale(const ModelParams& params) {
  const double N = params.particles;
  const double l = 0.5 * N;
  // Largest diagonal |2c m^k - 2i gamma m| is at |m| = l; the largest
  // off-diagonal v sqrt((N-n)(n+1)) is at n = floor(N/2).
  const double diag = std::abs(Complex(2.0 * params.c * std::pow(l, params.pert_power), 2.0 * params.gamma * l));
  const double half = std::floor(0.5 * N);
  const double off = std::abs(params.v) * std::sqrt((N - half) * (half + 1.0));
  return std::max({1.0, diag, off});
}

ModelParams with_parameter(ModelParams params, SweepVariable vary, double value) {
  if (vary == SweepVariable::gamma) {
    params.gamma = value;
  } else {
    params.c = value;
  }
  return params;
}

std::vector<Spectrum> sweep(const ModelParams& base, SweepVariable vary, const std::vector<double>& grid, int threads) {
  std::vector<Spectrum> out(grid.size());
  parallel_for(grid.size(), threads, [&](std::size_t i) {
    try {
      out[i] = compute_spectrum(with_parameter(base, vary, grid[i]));
    } catch (const NumericalError& e) {
      throw NumericalError("grid point " + std::to_string(i) + " (" + (vary == SweepVariable::gamma ? "gamma" : "c") +
                           " = " + std::to_string(grid[i]) + "): " + e.what());
    }
  });
  return out;
}

// Hungarian method with row/column potentials, O(n^3).
std::vector<std::size_t> optimal_assignment(const std::vector<std::vector<double>>& cost) {
  const std::size_t n = cost.size();
  for (const auto& row : cost)
    if (row.size() != n) throw std::invalid_argument("optimal_assignment needs a square cost matrix");
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = match[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> row_to_col(n);
  for (std::size_t j = 1; j <= n; ++j) row_to_col[match[j] - 1] = j - 1;
  return row_to_col;
}

namespace {

std::vector<std::vector<double>> distance_matrix(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("matching sets of different sizes");
  std::vector<std::vector<double>> cost(a.size(), std::vector<double>(b.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) cost[i][j] = std::abs(a[i] - b[j]);
  return cost;
}

std::vector<double> matched_jumps(const std::vector<Complex>& from, const std::vector<Complex>& to) {
  const auto next = match_to(from, to);
  std::vector<double> jumps(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) jumps[i] = std::abs(next[i] - from[i]);
  return jumps;
}

}  // namespace

std::vector<Complex> match_to(const std::vector<Complex>& previous, const std::vector<Complex>& next) {
  const auto assignment = optimal_assignment(distance_matrix(previous, next));
  std::vector<Complex> out(previous.size());
  for (std::size_t i = 0; i < previous.size(); ++i) out[i] = next[assignment[i]];
  return out;
}

double matched_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  const auto matched = match_to(a, b);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - matched[i]));
  return worst;
}

bool step_is_flagged(const std::vector<Complex>& from, const std::vector<Complex>& to, const JumpRule& rule) {
  if (from.empty()) return false;
  auto jumps = matched_jumps(from, to);
  const double largest = *std::max_element(jumps.begin(), jumps.end());
  if (largest <= rule.floor) return false;
  auto mid = jumps.begin() + static_cast<std::ptrdiff_t>(jumps.size() / 2);
  std::nth_element(jumps.begin(), mid, jumps.end());
  return largest > rule.ratio * *mid;
}

BranchMatch match_branches(const std::vector<double>& grid, const std::vector<std::vector<Complex>>& values,
                           const JumpRule& rule) {
  if (grid.size() != values.size()) throw std::invalid_argument("grid and value lists differ in length");
  BranchMatch result;
  if (grid.empty()) return result;
  const std::size_t branches = values.front().size();
  result.trajectories.resize(branches);
  for (std::size_t b = 0; b < branches; ++b) {
    result.trajectories[b].branch = static_cast<int>(b);
    result.trajectories[b].param.push_back(grid[0]);
    result.trajectories[b].values.push_back(values[0][b]);
  }
  std::vector<Complex> current = values[0];
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (step_is_flagged(current, values[i], rule)) result.flagged_steps.push_back(i - 1);
    current = match_to(current, values[i]);
    for (std::size_t b = 0; b < branches; ++b) {
      result.trajectories[b].param.push_back(grid[i]);
      result.trajectories[b].values.push_back(current[b]);
    }
  }
  return result;
}

BranchMatch match_branches(const std::vector<Spectrum>& spectra, SweepVariable vary, const JumpRule& rule) {
  std::vector<double> grid;
  std::vector<std::vector<Complex>> values;
  for (const auto& s : spectra) {
    grid.push_back(vary == SweepVariable::gamma ? s.params.gamma : s.params.c);
    values.push_back(s.eigenvalues);
  }
  return match_branches(grid, values, rule);
}

RefinedSweep refine(const std::function<std::vector<Complex>(double)>& compute, std::vector<double> grid,
                    int max_levels, const JumpRule& rule) {
  RefinedSweep out;
  out.grid = std::move(grid);
  for (double x : out.grid) out.values.push_back(compute(x));
  for (int level = 0;; ++level) {
    out.match = match_branches(out.grid, out.values, rule);
    out.levels_used = level;
    if (out.match.flagged_steps.empty()) break;
    if (level == max_levels) {
      out.unresolved_steps = out.match.flagged_steps;
      break;
    }
    std::vector<double> grid_next;
    std::vector<std::vector<Complex>> values_next;
    std::size_t f = 0;
    for (std::size_t i = 0; i < out.grid.size(); ++i) {
      grid_next.push_back(out.grid[i]);
      values_next.push_back(out.values[i]);
      if (f < out.match.flagged_steps.size() && out.match.flagged_steps[f] == i) {
        const double mid = 0.5 * (out.grid[i] + out.grid[i + 1]);
        grid_next.push_back(mid);
        values_next.push_back(compute(mid));
        ++f;
      }
    }
    out.grid = std::move(grid_next);
    out.values = std::move(values_next);
  }
  return out;
}

Classification classify(const std::vector<Complex>& eigenvalues, double imag_tol, double scale) {
  Classification c;
  c.imag_tolerance = imag_tol;
  std::vector<Complex> upper, lower_conj;
  for (const auto& z : eigenvalues) {
    if (std::abs(z.imag()) <= imag_tol) {
      ++c.real_count;
    } else if (z.imag() > 0) {
      upper.push_back(z);
    } else {
      lower_conj.push_back(std::conj(z));
    }
  }
  if (upper.size() != lower_conj.size()) {
    throw NumericalError("unpaired non-real eigenvalue: " + std::to_string(upper.size()) + " above and " +
                         std::to_string(lower_conj.size()) + " below the real axis");
  }
  if (!upper.empty()) {
    const double pair_tol = std::max(imag_tol, 1e-9 * scale);
    const double worst = matched_distance(upper, lower_conj);
    if (worst > pair_tol) {
      std::ostringstream os;
      os << "non-real eigenvalues do not pair under conjugation (mismatch " << worst << ")";
      throw NumericalError(os.str());
    }
  }
  c.conjugate_pair_count = static_cast<int>(upper.size());
  return c;
}

Classification classify(const Spectrum& spectrum) {
  const double scale = spectral_scale(spectrum.params);
  return classify(spectrum.eigenvalues, 1e-9 * scale, scale);
}

}  // namespace epspectra
