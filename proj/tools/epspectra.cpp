// epspectra: command-line front end.
//
// Exit codes: 0 success, 1 usage, 2 numerical failure, 3 acceptance failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "epspectra/acceptance.hpp"
#include "epspectra/charpoly.hpp"
#include "epspectra/ep_locator.hpp"
#include "epspectra/errors.hpp"
#include "epspectra/format.hpp"
#include "epspectra/grid.hpp"
#include "epspectra/newton.hpp"
#include "epspectra/parallel.hpp"
#include "epspectra/spectra.hpp"

using namespace epspectra;

namespace {

constexpr int exit_usage = 1;
constexpr int exit_numerical = 2;
constexpr int exit_acceptance = 3;

// Exact charpolys get slow beyond this dimension.
constexpr std::size_t large_exact_dim = 25;

struct RunConfig {
  int particles = 1;
  std::string v = "1";
  std::string gamma;
  std::string c;
  int pert_power = 2;
  std::string format;
  std::string output = "-";
  int threads = 0;

  // trajectory
  int refine_levels = 0;
  // newton
  std::string parameter = "c";
  // ep-map
  std::optional<double> gamma_max;
  double tol = 1e-9;
  double imag_tol_rel = 1e-12;
  int coarse_steps = 200;
  // verify
  double tolerance_scale = 1.0;
  std::vector<int> only;
  bool timings = false;
  bool no_budgets = false;
};

Rational exact(const std::string& text, const char* name) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string("--") + name + " must be an exact decimal or fraction, got '" + text + "'");
  }
}

int thread_count(const RunConfig& cfg) { return cfg.threads > 0 ? cfg.threads : default_thread_count(); }

ModelParams base_params(const RunConfig& cfg) {
  if (cfg.particles < 1) throw UsageError("--particles must be at least 1");
  ModelParams p;
  p.particles = cfg.particles;
  p.v = to_double(exact(cfg.v, "v"));
  p.pert_power = cfg.pert_power;
  return p;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw UsageError("cannot open output file '" + cfg.output + "'");
  out << text;
  if (!out) throw std::runtime_error("failed writing '" + cfg.output + "'");
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw UsageError("unsupported --format '" + format + "' for this subcommand");
}

int cmd_spectrum(const RunConfig& cfg) {
  check_format(cfg.format, {"csv", "json"});
  ModelParams base = base_params(cfg);
  base.c = to_double(exact(cfg.c, "c"));
  const auto grid = expand(parse_grid(cfg.gamma));
  const auto spectra = sweep(base, SweepVariable::gamma, grid, thread_count(cfg));
  std::ostringstream os;
  if (cfg.format == "csv") {
    write_branches_csv(os, match_branches(spectra, SweepVariable::gamma), "param");
  } else {
    write_spectra_json(os, {base.particles, base.v, "c", base.c, "gamma", grid}, spectra);
  }
  emit(cfg, os.str());
  return 0;
}

int cmd_trajectory(const RunConfig& cfg) {
  check_format(cfg.format, {"csv", "json"});
  ModelParams base = base_params(cfg);
  base.gamma = to_double(exact(cfg.gamma.empty() ? cfg.v : cfg.gamma, "gamma"));
  const auto grid = expand(parse_grid(cfg.c));
  BranchMatch match;
  std::vector<double> used_grid = grid;
  if (cfg.refine_levels > 0) {
    const auto refined = refine(
        [&](double c) { return compute_spectrum(with_parameter(base, SweepVariable::c, c)).eigenvalues; }, grid,
        cfg.refine_levels);
    match = refined.match;
    used_grid = refined.grid;
    if (!refined.unresolved_steps.empty()) {
      std::cerr << "warning: " << refined.unresolved_steps.size()
                << " branch-matching steps still flagged after refinement\n";
    }
  } else {
    match = match_branches(sweep(base, SweepVariable::c, grid, thread_count(cfg)), SweepVariable::c);
  }
  std::ostringstream os;
  if (cfg.format == "csv") {
    write_branches_csv(os, match, "param");
  } else {
    write_trajectories_json(os, {base.particles, base.v, "gamma", base.gamma, "c", used_grid}, match);
  }
  emit(cfg, os.str());
  return 0;
}

CharPoly exact_charpoly(const RunConfig& cfg) {
  if (cfg.particles < 1) throw UsageError("--particles must be at least 1");
  if (static_cast<std::size_t>(cfg.particles) + 1 >= large_exact_dim) {
    std::cerr << "warning: exact characteristic polynomial of dimension " << cfg.particles + 1
              << " may take a long time\n";
  }
  const Rational v = exact(cfg.v, "v");
  const Rational gamma = exact(cfg.gamma.empty() ? cfg.v : cfg.gamma, "gamma");
  if (cfg.pert_power == 2) return faddeev_leverrier(build_exact_pt_hamiltonian(cfg.particles, gamma, v));
  if (gamma != v) throw UsageError("--pert-power other than 2 is only available at gamma = v");
  if (cfg.pert_power < 1) throw UsageError("--pert-power must be at least 1");
  return faddeev_leverrier(build_rotated_hamiltonian(cfg.particles, v, cfg.pert_power));
}

int cmd_charpoly(const RunConfig& cfg) {
  check_format(cfg.format, {"text", "json"});
  CharPoly cp = exact_charpoly(cfg);
  if (!cfg.c.empty()) cp = substitute(cp, GaussianRational(exact(cfg.c, "c")));
  std::ostringstream os;
  if (cfg.format == "text") {
    os << "# chi(lambda) = -sum_k p[k] lambda^(M-k), M = " << cp.dim << '\n';
    os << format_coefficients(cp);
    os << "# det(lambda I - H) = sum_k q[k] lambda^k\n";
    os << format_monic(cp);
  } else {
    JsonWriter w(os);
    w.begin_object();
    w.key("N").value(cfg.particles);
    w.key("v").value(cfg.v);
    w.key("gamma").value(cfg.gamma.empty() ? cfg.v : cfg.gamma);
    if (!cfg.c.empty()) w.key("c").value(cfg.c);
    w.key("pert_power").value(cfg.pert_power);
    w.key("p").begin_array();
    for (const auto& p : cp.p) w.value(to_string(p));
    w.end_array();
    w.key("monic").begin_array();
    for (std::size_t k = 0; k <= cp.dim; ++k) w.value(to_string(cp.monic(k)));
    w.end_array();
    w.end_object();
    os << '\n';
  }
  emit(cfg, os.str());
  return 0;
}

int cmd_newton(const RunConfig& cfg) {
  check_format(cfg.format, {"text", "json"});
  if (cfg.particles < 1) throw UsageError("--particles must be at least 1");
  const Rational v = exact(cfg.v, "v");
  CharPoly cp;
  RingPrediction prediction;
  if (cfg.parameter == "c") {
    if (cfg.pert_power < 1) throw UsageError("--pert-power must be at least 1");
    cp = faddeev_leverrier(build_rotated_hamiltonian(cfg.particles, v, cfg.pert_power));
    prediction = predict_ring_counts(cfg.particles, cfg.pert_power);
  } else if (cfg.parameter == "delta") {
    // The detuning perturbation (L_+ - L_-) is tridiagonal, i.e. k = 1.
    cp = faddeev_leverrier(build_detuned_hamiltonian(cfg.particles, v));
    prediction = predict_ring_counts(cfg.particles, 1);
  } else {
    throw UsageError("--parameter must be 'c' or 'delta'");
  }
  const NewtonDiagram d = analyze_unfolding(cp);
  std::ostringstream os;
  if (cfg.format == "text") {
    write_newton_text(os, d, prediction);
  } else {
    write_newton_json(os, d, prediction);
  }
  emit(cfg, os.str());
  return 0;
}

int cmd_ep_map(const RunConfig& cfg) {
  check_format(cfg.format, {"csv", "json"});
  const ModelParams base = base_params(cfg);
  if (base.pert_power != 2) throw UsageError("ep-map supports --pert-power 2 only");
  const auto grid = expand(parse_grid(cfg.c));
  LocateOptions options;
  options.gamma_max = cfg.gamma_max;
  options.tol = cfg.tol;
  options.imag_tol_rel = cfg.imag_tol_rel;
  options.coarse_steps = cfg.coarse_steps;
  if (!(options.tol > 0.0)) throw UsageError("--tol must be positive");
  const EPMap map = ep_map(base, grid, options, thread_count(cfg));
  std::ostringstream os;
  if (cfg.format == "csv") {
    write_ep_map_csv(os, map);
  } else {
    write_ep_map_json(os, map, base, options);
  }
  emit(cfg, os.str());
  for (const auto& f : map.failures)
    if (!f.empty()) std::cerr << "error: " << f << '\n';
  return map.ok() ? 0 : exit_numerical;
}

int cmd_verify(const RunConfig& cfg) {
  AcceptanceOptions options;
  options.tolerance_scale = cfg.tolerance_scale;
  options.only = cfg.only;
  options.enforce_budgets = !cfg.no_budgets;
  options.threads = thread_count(cfg);
  const auto results = run_acceptance(options);
  std::ostringstream os;
  write_acceptance_report(os, results, cfg.timings);
  emit(cfg, os.str());
  return all_passed(results) ? 0 : exit_acceptance;
}

void add_model_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("-N,--particles", cfg.particles, "Particle number N (matrix dimension N+1)")->required();
  sub->add_option("--v", cfg.v, "Tunneling v (exact decimal)")->capture_default_str();
  sub->add_option("-o,--output", cfg.output, "Output file, - for stdout")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra and exceptional points of the PT-symmetric two-mode Bose-Hubbard model"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues over a gamma grid");
  add_model_options(spectrum, cfg);
  spectrum->add_option("--gamma", cfg.gamma, "Gamma grid min:max:steps[:log] or a value")->required();
  spectrum->add_option("--c", cfg.c, "Interaction c")->default_str("0");
  spectrum->add_option("--pert-power", cfg.pert_power, "Exponent k of the perturbation 2 c L_z^k")->capture_default_str();
  spectrum->add_option("--format", cfg.format, "csv or json")->default_str("csv");
  spectrum->add_option("--threads", cfg.threads, "Worker threads (0: default)");

  auto* trajectory = app.add_subcommand("trajectory", "Branch-matched eigenvalue trajectories over a c grid");
  add_model_options(trajectory, cfg);
  trajectory->add_option("--gamma", cfg.gamma, "Fixed gamma (default v)");
  trajectory->add_option("--c", cfg.c, "c grid min:max:steps[:log] or a value")->required();
  trajectory->add_option("--pert-power", cfg.pert_power, "Exponent k of the perturbation")->capture_default_str();
  trajectory->add_option("--refine", cfg.refine_levels, "Dyadic refinement levels at flagged steps")
      ->capture_default_str();
  trajectory->add_option("--format", cfg.format, "csv or json")->default_str("csv");
  trajectory->add_option("--threads", cfg.threads, "Worker threads (0: default)");

  auto* charpoly = app.add_subcommand("charpoly", "Exact characteristic polynomial in c");
  add_model_options(charpoly, cfg);
  charpoly->add_option("--gamma", cfg.gamma, "Gamma (default v)");
  charpoly->add_option("--c", cfg.c, "Substitute a fixed c (default: symbolic)");
  charpoly->add_option("--pert-power", cfg.pert_power, "Exponent k; k != 2 needs gamma = v")->capture_default_str();
  charpoly->add_option("--format", cfg.format, "text or json")->default_str("text");

  auto* newton = app.add_subcommand("newton", "Newton diagram and eigenvalue rings at the order-(N+1) point");
  add_model_options(newton, cfg);
  newton->add_option("--parameter", cfg.parameter, "c (at gamma = v) or delta (gamma - v at c = 0)")
      ->capture_default_str();
  newton->add_option("--pert-power", cfg.pert_power, "Exponent k of the perturbation")->capture_default_str();
  newton->add_option("--format", cfg.format, "text or json")->default_str("text");

  auto* epmap = app.add_subcommand("ep-map", "Second-order EP positions over a c grid");
  add_model_options(epmap, cfg);
  epmap->add_option("--c", cfg.c, "c grid min:max:steps[:log] or a value")->required();
  epmap->add_option("--gamma-max", cfg.gamma_max, "Upper end of the gamma scan (default v (N+3)/2)");
  epmap->add_option("--tol", cfg.tol, "Bisection tolerance in gamma")->capture_default_str();
  epmap->add_option("--imag-tol", cfg.imag_tol_rel, "Real/complex threshold relative to the spectral scale")
      ->capture_default_str();
  epmap->add_option("--coarse-steps", cfg.coarse_steps, "Coarse gamma scan cells")->capture_default_str();
  epmap->add_option("--format", cfg.format, "csv or json")->default_str("csv");
  epmap->add_option("--threads", cfg.threads, "Worker threads (0: default)");

  auto* verify = app.add_subcommand("verify", "Run the acceptance table");
  verify->add_option("--tolerance-scale", cfg.tolerance_scale, "Multiply every acceptance tolerance")
      ->capture_default_str();
  verify->add_option("--only", cfg.only, "Run only these criterion ids");
  verify->add_flag("--timings", cfg.timings, "Append runtimes to each line");
  verify->add_flag("--no-budgets", cfg.no_budgets, "Do not fail criteria that exceed their runtime budget");
  verify->add_option("-o,--output", cfg.output, "Output file, - for stdout")->capture_default_str();
  verify->add_option("--threads", cfg.threads, "Worker threads (0: default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }
  // Defaults that depend on the subcommand.
  if (cfg.format.empty()) cfg.format = (*charpoly || *newton) ? "text" : "csv";
  if (cfg.c.empty() && *spectrum) cfg.c = "0";

  try {
    if (*spectrum) return cmd_spectrum(cfg);
    if (*trajectory) return cmd_trajectory(cfg);
    if (*charpoly) return cmd_charpoly(cfg);
    if (*newton) return cmd_newton(cfg);
    if (*epmap) return cmd_ep_map(cfg);
    if (*verify) return cmd_verify(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_numerical;
  }
  return exit_usage;
}
