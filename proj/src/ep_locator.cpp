#include "epspectra/ep_locator.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "epspectra/errors.hpp"
#include "epspectra/parallel.hpp"

namespace epspectra {

namespace {

struct Transition {
  double gamma;
  double bracket;
  int change;  // |count difference| across the bracket
};

using Counter = std::function<int(double)>;

void bisect(const Counter& count, double a, int na, double b, int nb, double tol, std::vector<Transition>& out) {
  if (b - a <= tol) {
    out.push_back({0.5 * (a + b), b - a, std::abs(nb - na)});
    return;
  }
  const double mid = 0.5 * (a + b);
  const int nm = count(mid);
  if (nm != na) bisect(count, a, na, mid, nm, tol, out);
  if (nm != nb) bisect(count, mid, nm, b, nb, tol, out);
}

std::vector<Transition> scan(const Counter& count, double lo, double hi, int steps, double tol) {
  if (!(hi > lo)) throw UsageError("gamma range must have max > min");
  if (steps < 1) throw UsageError("coarse grid needs at least one step");
  std::vector<Transition> out;
  double prev_x = lo;
  int prev_n = count(lo);
  for (int i = 1; i <= steps; ++i) {
    const double x = i == steps ? hi : lo + (hi - lo) * i / steps;
    const int n = count(x);
    if (n != prev_n) bisect(count, prev_x, prev_n, x, n, tol, out);
    prev_x = x;
    prev_n = n;
  }
  return out;
}

double gamma_upper(const ModelParams& base, const LocateOptions& options) {
  return options.gamma_max.value_or(std::abs(base.v) * (base.particles + 3) / 2.0);
}

EPRecord make_record(const ModelParams& base, double gamma, double bracket, int order, EPMethod method) {
  EPRecord r;
  r.gamma = gamma;
  r.c = base.c;
  r.v = base.v;
  r.particles = base.particles;
  r.order = order;
  r.method = method;
  r.bracket = bracket;
  return r;
}

}  // namespace

std::string to_string(EPMethod method) {
  switch (method) {
    case EPMethod::pair_count_bisection:
      return "pair-count-bisection";
    case EPMethod::width_split_heuristic:
      return "width-split-heuristic";
    case EPMethod::analytic:
      return "analytic";
  }
  return "unknown";
}

int complex_pair_count(const ModelParams& params, double imag_tol) {
  const Spectrum s = compute_spectrum(params);
  return classify(s.eigenvalues, imag_tol, spectral_scale(params)).conjugate_pair_count;
}

std::vector<EPRecord> locate_eps(const ModelParams& base, const LocateOptions& options) {
  if (!(base.c > 0.0)) throw UsageError("locate_eps needs c > 0; use mother_ep_check at c = 0");
  const Counter count = [&](double gamma) {
    ModelParams p = base;
    p.gamma = gamma;
    return complex_pair_count(p, options.imag_tol_rel * spectral_scale(p));
  };
  std::vector<EPRecord> records;
  for (const auto& t : scan(count, options.gamma_min, gamma_upper(base, options), options.coarse_steps, options.tol)) {
    for (int i = 0; i < t.change; ++i)
      records.push_back(make_record(base, t.gamma, t.bracket, 2, EPMethod::pair_count_bisection));
  }
  std::stable_sort(records.begin(), records.end(), [](const EPRecord& a, const EPRecord& b) { return a.gamma < b.gamma; });
  return records;
}

std::vector<EPRecord> width_split_heuristic(const ModelParams& base, double threshold, const LocateOptions& options,
                                            double merge_window) {
  // The widths of a conjugate pair are +-Im(lambda), so they differ by 2|Im|.
  const Counter count = [&](double gamma) {
    ModelParams p = base;
    p.gamma = gamma;
    const Spectrum s = compute_spectrum(p);
    int split = 0;
    for (const auto& z : s.eigenvalues)
      if (z.imag() > 0.5 * threshold) ++split;
    return split;
  };
  auto transitions = scan(count, options.gamma_min, gamma_upper(base, options), options.coarse_steps, options.tol);
  std::vector<EPRecord> records;
  std::size_t i = 0;
  while (i < transitions.size()) {
    std::size_t j = i;
    int pairs = transitions[i].change;
    while (j + 1 < transitions.size() && transitions[j + 1].gamma - transitions[j].gamma <= merge_window) {
      ++j;
      pairs += transitions[j].change;
    }
    if (j == i && pairs == 1) {
      records.push_back(make_record(base, transitions[i].gamma, transitions[i].bracket, 2,
                                    EPMethod::width_split_heuristic));
    } else {
      const double lo = transitions[i].gamma - 0.5 * transitions[i].bracket;
      const double hi = transitions[j].gamma + 0.5 * transitions[j].bracket;
      const int order = base.c == 0.0 ? base.particles + 1 : 2 * pairs;
      records.push_back(make_record(base, 0.5 * (lo + hi), hi - lo, order, EPMethod::width_split_heuristic));
    }
    i = j + 1;
  }
  return records;
}

bool EPMap::ok() const {
  return std::all_of(failures.begin(), failures.end(), [](const std::string& f) { return f.empty(); });
}

EPMap ep_map(const ModelParams& base, const std::vector<double>& c_grid, const LocateOptions& options, int threads) {
  EPMap map;
  map.c_grid = c_grid;
  map.records.resize(c_grid.size());
  map.failures.resize(c_grid.size());
  parallel_for(c_grid.size(), threads, [&](std::size_t i) {
    ModelParams p = base;
    p.c = c_grid[i];
    try {
      map.records[i] = locate_eps(p, options);
    } catch (const std::exception& e) {
      std::ostringstream os;
      os << "c=" << c_grid[i] << ": " << e.what();
      map.failures[i] = os.str();
    }
  });
  return map;
}

MotherEPReport mother_ep_check(const Rational& v, int particles) {
  MotherEPReport report;
  report.particles = particles;
  const ExactMatrix h = substitute(build_exact_pt_hamiltonian(particles, v, v).exact(), GaussianRational(0L));
  ExactMatrix power = h;
  for (int k = 1; k < particles; ++k) power = power * h;
  auto is_zero = [](const ExactMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m(i, j).is_zero()) return false;
    return true;
  };
  report.power_n_nonzero = !is_zero(power);
  report.power_n_plus_1_zero = is_zero(power * h);
  if (!report.power_n_nonzero || !report.power_n_plus_1_zero) {
    throw NumericalError("H is not nilpotent of index N+1 at gamma = v, c = 0 (N=" + std::to_string(particles) + ")");
  }

  ModelParams p;
  p.particles = particles;
  p.v = to_double(v);
  p.gamma = p.v;
  p.c = 0.0;
  report.norm = max_abs(build_hamiltonian(p, Basis::orthonormal).numeric());
  for (const auto& z : compute_spectrum(p).eigenvalues)
    report.max_eigenvalue_modulus = std::max(report.max_eigenvalue_modulus, std::abs(z));
  report.eigenvalues_ok = report.max_eigenvalue_modulus <= 1e-6 * report.norm;
  return report;
}

std::vector<StrongCouplingPrediction> strong_coupling_predictions(int particles, double v, double gamma) {
  AngularMomentumRep rep(particles);
  std::vector<StrongCouplingPrediction> out;
  const double l = 0.5 * particles;
  const double gamma_inf = std::abs(v) * (particles + 1) / 2.0;
  for (int n = 0; n <= particles; ++n) {
    const double m = n - l;
    StrongCouplingPrediction pred;
    pred.m_z = m;
    if (std::abs(m) == 0.5) {
      // Degenerate m = +-1/2 doublet coupled by 2 v L_x: +-sqrt(gamma_inf^2 - gamma^2).
      const Complex root = std::sqrt(Complex(gamma_inf * gamma_inf - gamma * gamma, 0.0));
      pred.e1 = m > 0 ? root : -root;
      pred.gamma_infinity = gamma_inf;
    } else {
      pred.e1 = Complex(0.0, -2.0 * gamma * m);
    }
    out.push_back(pred);
  }
  return out;
}

StrongCouplingReport strong_coupling_validation(int particles, double v, double gamma, double c) {
  StrongCouplingReport report;
  for (const auto& pred : strong_coupling_predictions(particles, v, gamma))
    report.predicted.push_back(2.0 * c * pred.m_z * pred.m_z + pred.e1);
  ModelParams p;
  p.particles = particles;
  p.v = v;
  p.gamma = gamma;
  p.c = c;
  const auto computed = compute_spectrum(p).eigenvalues;
  report.computed = match_to(report.predicted, computed);
  report.bound = 5.0 * std::abs(v) * particles / c;
  report.passed = true;
  for (std::size_t i = 0; i < report.predicted.size(); ++i) {
    const double err = std::abs(report.computed[i] - report.predicted[i]) / std::max(std::abs(report.predicted[i]), c);
    report.relative_errors.push_back(err);
    if (!(err <= report.bound)) report.passed = false;
  }
  return report;
}

}  // namespace epspectra
