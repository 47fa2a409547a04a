#include "epspectra/format.hpp"

#include <cstdio>
#include <sstream>

namespace epspectra {

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // fold -0 into 0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", x);
  return buf;
}

std::string json_escape(std::string_view s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

void JsonWriter::separate() {
  if (after_key_) {
    after_key_ = false;
    return;
  }
  if (!first_.empty()) {
    if (!first_.back()) os_ << ',';
    first_.back() = false;
  }
}

JsonWriter& JsonWriter::begin_object() {
  separate();
  os_ << '{';
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  first_.pop_back();
  os_ << '}';
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  separate();
  os_ << '[';
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  first_.pop_back();
  os_ << ']';
  return *this;
}

JsonWriter& JsonWriter::key(std::string_view name) {
  separate();
  os_ << '"' << json_escape(name) << "\":";
  after_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(double x) {
  separate();
  os_ << format_number(x);
  return *this;
}

JsonWriter& JsonWriter::value(int x) {
  separate();
  os_ << x;
  return *this;
}

JsonWriter& JsonWriter::value(std::string_view s) {
  separate();
  os_ << '"' << json_escape(s) << '"';
  return *this;
}

JsonWriter& JsonWriter::value(bool b) {
  separate();
  os_ << (b ? "true" : "false");
  return *this;
}

namespace {

void write_metadata(JsonWriter& w, const SweepMetadata& meta) {
  w.key("metadata").begin_object();
  w.key("N").value(meta.particles);
  w.key("v").value(meta.v);
  w.key(meta.fixed_name).value(meta.fixed_value);
  w.key("vary").value(meta.vary_name);
  w.key("grid").begin_array();
  for (double x : meta.grid) w.value(x);
  w.end_array();
  w.end_object();
}

void write_complex(JsonWriter& w, const Complex& z) {
  w.key("re").value(z.real());
  w.key("im").value(z.imag());
}

std::string ring_census_text(const RingCensus& census) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [size, count] : census) {
    if (!first) os << ", ";
    first = false;
    os << count << " x size " << size;
  }
  return first ? "none" : os.str();
}

}  // namespace

void write_branches_csv(std::ostream& os, const BranchMatch& match, std::string_view param_name) {
  os << param_name << ",branch,re,im\n";
  if (match.trajectories.empty()) return;
  const std::size_t points = match.trajectories.front().param.size();
  for (std::size_t i = 0; i < points; ++i) {
    for (const auto& t : match.trajectories) {
      os << format_number(t.param[i]) << ',' << t.branch << ',' << format_number(t.values[i].real()) << ','
         << format_number(t.values[i].imag()) << '\n';
    }
  }
}

void write_spectra_json(std::ostream& os, const SweepMetadata& meta, const std::vector<Spectrum>& spectra) {
  JsonWriter w(os);
  w.begin_object();
  write_metadata(w, meta);
  w.key("spectra").begin_array();
  for (const auto& s : spectra) {
    w.begin_object();
    w.key("param").value(meta.vary_name == "c" ? s.params.c : s.params.gamma);
    w.key("eigenvalues").begin_array();
    for (const auto& z : s.eigenvalues) {
      w.begin_object();
      write_complex(w, z);
      w.end_object();
    }
    w.end_array();
    w.end_object();
  }
  w.end_array();
  w.end_object();
  os << '\n';
}

void write_trajectories_json(std::ostream& os, const SweepMetadata& meta, const BranchMatch& match) {
  JsonWriter w(os);
  w.begin_object();
  write_metadata(w, meta);
  w.key("flagged_steps").begin_array();
  for (auto step : match.flagged_steps) w.value(static_cast<int>(step));
  w.end_array();
  w.key("trajectories").begin_array();
  for (const auto& t : match.trajectories) {
    w.begin_object();
    w.key("branch").value(t.branch);
    w.key("points").begin_array();
    for (std::size_t i = 0; i < t.param.size(); ++i) {
      w.begin_object();
      w.key("param").value(t.param[i]);
      write_complex(w, t.values[i]);
      w.end_object();
    }
    w.end_array();
    w.end_object();
  }
  w.end_array();
  w.end_object();
  os << '\n';
}

void write_ep_map_csv(std::ostream& os, const EPMap& map) {
  os << "c,index,gamma_tilde,order,method\n";
  for (std::size_t i = 0; i < map.c_grid.size(); ++i) {
    int index = 1;
    for (const auto& r : map.records[i]) {
      os << format_number(map.c_grid[i]) << ',' << index++ << ',' << format_number(r.gamma) << ',' << r.order << ','
         << to_string(r.method) << '\n';
    }
  }
}

void write_ep_map_json(std::ostream& os, const EPMap& map, const ModelParams& base, const LocateOptions& options) {
  JsonWriter w(os);
  w.begin_object();
  w.key("metadata").begin_object();
  w.key("N").value(base.particles);
  w.key("v").value(base.v);
  w.key("tol").value(options.tol);
  w.key("imag_tol_rel").value(options.imag_tol_rel);
  w.key("coarse_steps").value(options.coarse_steps);
  w.key("gamma_min").value(options.gamma_min);
  w.key("gamma_max").value(options.gamma_max.value_or(std::abs(base.v) * (base.particles + 3) / 2.0));
  w.key("c_grid").begin_array();
  for (double c : map.c_grid) w.value(c);
  w.end_array();
  w.end_object();
  w.key("points").begin_array();
  for (std::size_t i = 0; i < map.c_grid.size(); ++i) {
    w.begin_object();
    w.key("c").value(map.c_grid[i]);
    if (!map.failures[i].empty()) w.key("error").value(map.failures[i]);
    w.key("eps").begin_array();
    int index = 1;
    for (const auto& r : map.records[i]) {
      w.begin_object();
      w.key("index").value(index++);
      w.key("gamma_tilde").value(r.gamma);
      w.key("order").value(r.order);
      w.key("method").value(to_string(r.method));
      w.key("bracket").value(r.bracket);
      w.end_object();
    }
    w.end_array();
    w.end_object();
  }
  w.end_array();
  w.end_object();
  os << '\n';
}

void write_newton_text(std::ostream& os, const NewtonDiagram& d, const RingPrediction& prediction) {
  os << "points (k, a_k, f_k):\n";
  for (const auto& p : d.points) os << "  (" << p.k << ", " << p.a << ")  f = " << to_string(p.f) << '\n';
  os << "hull segments:\n";
  for (std::size_t s = 0; s < d.segments.size(); ++s) {
    const auto& seg = d.segments[s];
    os << "  segment " << s << ": mu = " << seg.mu.get_str() << ", points k =";
    for (const auto& p : seg.points) os << ' ' << p.k;
    os << '\n';
    os << "    reduced polynomial: ";
    bool first = true;
    for (std::size_t i = 0; i < d.reduced[s].size(); ++i) {
      if (d.reduced[s][i].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << to_string(d.reduced[s][i]) << " * e^" << i;
    }
    os << '\n';
  }
  os << "leading coefficients (first order, lambda ~ e1 c^mu):\n";
  for (const auto& b : d.branches) {
    if (b.identically_zero) {
      os << "  ring " << b.ring_id << ": lambda = 0 identically\n";
      continue;
    }
    os << "  ring " << b.ring_id << " (size " << b.ring_size << (b.irregular ? ", irregular" : "")
       << "): mu = " << b.mu.get_str() << ", e1 = " << format_number(b.e1.real()) << ' '
       << (b.e1.imag() < 0 ? "- " : "+ ") << format_number(std::abs(b.e1.imag())) << "i, |e1| = "
       << format_number(std::abs(b.e1)) << '\n';
  }
  const RingCensus observed = d.census();
  os << "rings observed: " << ring_census_text(observed) << '\n';
  os << "ring law: " << prediction.ring_count << " x size " << prediction.ring_size << " + " << prediction.remainder
     << " remaining -> " << (ring_law_holds(observed, prediction) ? "agrees" : "disagrees") << '\n';
}

void write_newton_json(std::ostream& os, const NewtonDiagram& d, const RingPrediction& prediction) {
  JsonWriter w(os);
  w.begin_object();
  w.key("points").begin_array();
  for (const auto& p : d.points) {
    w.begin_object();
    w.key("k").value(p.k);
    w.key("a").value(p.a);
    w.key("f").value(to_string(p.f));
    w.end_object();
  }
  w.end_array();
  w.key("segments").begin_array();
  for (std::size_t s = 0; s < d.segments.size(); ++s) {
    w.begin_object();
    w.key("mu").value(d.segments[s].mu.get_str());
    w.key("point_k").begin_array();
    for (const auto& p : d.segments[s].points) w.value(p.k);
    w.end_array();
    w.key("reduced_polynomial").begin_array();
    for (const auto& c : d.reduced[s]) w.value(to_string(c));
    w.end_array();
    w.end_object();
  }
  w.end_array();
  w.key("branches").begin_array();
  for (const auto& b : d.branches) {
    w.begin_object();
    w.key("mu").value(b.mu.get_str());
    w.key("re").value(b.e1.real());
    w.key("im").value(b.e1.imag());
    w.key("ring_id").value(b.ring_id);
    w.key("ring_size").value(b.ring_size);
    w.key("irregular").value(b.irregular);
    w.key("identically_zero").value(b.identically_zero);
    w.end_object();
  }
  w.end_array();
  w.key("prediction").begin_object();
  w.key("ring_count").value(prediction.ring_count);
  w.key("ring_size").value(prediction.ring_size);
  w.key("remainder").value(prediction.remainder);
  w.key("agrees").value(ring_law_holds(d.census(), prediction));
  w.end_object();
  w.end_object();
  os << '\n';
}

}  // namespace epspectra
