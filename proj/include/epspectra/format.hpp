#pragma once

// Text, CSV and JSON rendering. Every floating value is printed with 17
// significant digits ("%.16e"), so output is byte-for-byte reproducible.

#include <ostream>
#include <string>
#include <vector>

#include "epspectra/ep_locator.hpp"
#include "epspectra/newton.hpp"
#include "epspectra/spectra.hpp"

namespace epspectra {

std::string format_number(double x);

/// Minimal streaming JSON writer. Keys are written in call order; commas are
/// inserted automatically.
class JsonWriter {
 public:
  explicit JsonWriter(std::ostream& os) : os_(os) {}

  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view name);
  JsonWriter& value(double x);
  JsonWriter& value(int x);
  JsonWriter& value(std::string_view s);
  JsonWriter& value(const char* s) { return value(std::string_view(s)); }
  JsonWriter& value(bool b);

 private:
  void separate();
  std::ostream& os_;
  std::vector<bool> first_;
  bool after_key_ = false;
};

std::string json_escape(std::string_view s);

/// Header `<param>,branch,re,im`; one row per grid point and branch, branches
/// numbered by the optimal-assignment continuation.
void write_branches_csv(std::ostream& os, const BranchMatch& match, std::string_view param_name);

struct SweepMetadata {
  int particles = 1;
  double v = 1.0;
  /// "gamma" or "c": the parameter held fixed.
  std::string fixed_name;
  double fixed_value = 0.0;
  std::string vary_name;
  std::vector<double> grid;
};

/// {"metadata": {...}, "spectra": [{"param", "eigenvalues": [{"re","im"}]}]}
void write_spectra_json(std::ostream& os, const SweepMetadata& meta, const std::vector<Spectrum>& spectra);
/// {"metadata": {...}, "trajectories": [{"branch", "points": [{"param","re","im"}]}]}
void write_trajectories_json(std::ostream& os, const SweepMetadata& meta, const BranchMatch& match);

/// Header `c,index,gamma_tilde,order,method`; index counts from 1 per c.
void write_ep_map_csv(std::ostream& os, const EPMap& map);
void write_ep_map_json(std::ostream& os, const EPMap& map, const ModelParams& base, const LocateOptions& options);

/// Human-readable Newton diagram report.
void write_newton_text(std::ostream& os, const NewtonDiagram& diagram, const RingPrediction& prediction);
void write_newton_json(std::ostream& os, const NewtonDiagram& diagram, const RingPrediction& prediction);

}  // namespace epspectra
