#include "epspectra/newton.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "epspectra/eigensolver.hpp"
#include "epspectra/errors.hpp"

namespace epspectra {

namespace {

using cd = std::complex<double>;
using cld = std::complex<long double>;

// Cross product of (b - a) and (c - a); > 0 for a left turn.
long long cross(const DiagramPoint& a, const DiagramPoint& b, const DiagramPoint& c) {
  return static_cast<long long>(b.k - a.k) * (c.a - a.a) - static_cast<long long>(b.a - a.a) * (c.k - a.k);
}

double wrap_angle(double x) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  x = std::fmod(x, two_pi);
  if (x < 0) x += two_pi;
  return x;
}

}  // namespace

std::vector<DiagramPoint> build_points(const CharPoly& cp) {
  std::vector<DiagramPoint> points;
  for (std::size_t k = 0; k <= cp.dim; ++k) {
    if (auto low = lowest_power(cp.monic(k))) points.push_back({static_cast<int>(k), low->exponent, low->coeff});
  }
  return points;
}

std::vector<HullSegment> lower_hull(const std::vector<DiagramPoint>& points) {
  if (points.empty()) throw std::invalid_argument("lower_hull of an empty point set");
  // Andrew's monotone chain; points already ascend in k with distinct k.
  std::vector<DiagramPoint> hull;
  for (const auto& p : points) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  std::vector<HullSegment> segments;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    const auto& left = hull[i];
    const auto& right = hull[i + 1];
    if (right.a >= left.a) break;  // slopes only increase from here on
    HullSegment seg;
    seg.mu = Rational(left.a - right.a, right.k - left.k);
    seg.mu.canonicalize();
    for (const auto& p : points) {
      if (p.k >= left.k && p.k <= right.k && cross(left, right, p) == 0) seg.points.push_back(p);
    }
    segments.push_back(std::move(seg));
  }
  return segments;
}

std::vector<GaussianRational> reduced_polynomial(const HullSegment& segment) {
  std::vector<GaussianRational> poly(static_cast<std::size_t>(segment.k_max() - segment.k_min() + 1));
  for (const auto& p : segment.points) poly[static_cast<std::size_t>(p.k - segment.k_min())] = p.f;
  return poly;
}

std::vector<cd> solve_leading_coefficients(const std::vector<GaussianRational>& input) {
  std::vector<GaussianRational> poly = input;
  while (!poly.empty() && poly.back().is_zero()) poly.pop_back();
  if (poly.empty()) throw std::invalid_argument("leading coefficients of the zero polynomial");
  std::size_t shift = 0;
  while (poly[shift].is_zero()) ++shift;
  poly.erase(poly.begin(), poly.begin() + static_cast<std::ptrdiff_t>(shift));
  const std::size_t degree = poly.size() - 1;
  if (degree == 0) return {};

  std::size_t g = 0;
  for (std::size_t i = 1; i <= degree; ++i)
    if (!poly[i].is_zero()) g = std::gcd(g, i);

  std::vector<cld> full(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) full[i] = poly[i].to_complex_ld();
  std::vector<cld> in_w;
  for (std::size_t i = 0; i <= degree; i += g) in_w.push_back(full[i]);

  std::vector<cd> roots;
  for (const cd& w : polynomial_roots(in_w)) {
    const cld wl(w.real(), w.imag());
    const long double radius = std::pow(std::abs(wl), 1.0L / static_cast<long double>(g));
    const long double theta = std::arg(wl);
    for (std::size_t j = 0; j < g; ++j) {
      const long double phase =
          (theta + 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(j)) / static_cast<long double>(g);
      const cld e = std::polar(radius, phase);
      long double scale = 0;
      for (std::size_t i = 0; i <= degree; ++i) scale += std::abs(full[i]) * std::pow(std::abs(e), static_cast<long double>(i));
      if (std::abs(evaluate_polynomial(full, e)) > 1e-10L * scale) {
        throw NumericalError("leading-coefficient root did not converge for a degree-" + std::to_string(degree) +
                             " reduced polynomial");
      }
      roots.emplace_back(static_cast<double>(e.real()), static_cast<double>(e.imag()));
    }
  }
  sort_eigenvalues(roots);
  return roots;
}

std::vector<UnfoldingBranch> group_rings(const std::vector<cd>& coefficients, const Rational& mu, int first_ring_id,
                                         const RingTolerances& tol) {
  const int q = static_cast<int>(mu.get_den().get_si());
  std::vector<cd> sorted = coefficients;
  std::stable_sort(sorted.begin(), sorted.end(), [](const cd& a, const cd& b) { return std::abs(a) < std::abs(b); });

  // Modulus groups, then clusters of equal e^q inside each group.
  std::vector<std::vector<cd>> rings;
  std::size_t start = 0;
  while (start < sorted.size()) {
    const double ref = std::abs(sorted[start]);
    std::size_t end = start + 1;
    while (end < sorted.size() && std::abs(std::abs(sorted[end]) - ref) <= tol.modulus * ref) ++end;
    std::vector<std::pair<cd, std::vector<cd>>> clusters;
    for (std::size_t i = start; i < end; ++i) {
      const cd w = std::pow(sorted[i], q);
      auto it = std::find_if(clusters.begin(), clusters.end(),
                             [&](const auto& cl) { return std::abs(cl.first - w) <= tol.modulus * std::abs(cl.first); });
      if (it == clusters.end()) {
        clusters.push_back({w, {sorted[i]}});
      } else {
        it->second.push_back(sorted[i]);
      }
    }
    std::stable_sort(clusters.begin(), clusters.end(),
                     [](const auto& a, const auto& b) { return std::arg(a.first) < std::arg(b.first); });
    for (auto& cl : clusters) rings.push_back(std::move(cl.second));
    start = end;
  }

  std::vector<UnfoldingBranch> out;
  int id = first_ring_id;
  for (auto& ring : rings) {
    std::sort(ring.begin(), ring.end(), [](const cd& a, const cd& b) { return wrap_angle(std::arg(a)) < wrap_angle(std::arg(b)); });
    const std::size_t size = ring.size();
    bool irregular = false;
    if (size > 1) {
      const double step = 2.0 * std::numbers::pi / static_cast<double>(size);
      for (std::size_t i = 0; i < size; ++i) {
        const double gap = wrap_angle(std::arg(ring[(i + 1) % size]) - std::arg(ring[i]));
        if (std::abs(gap - step) > tol.phase) irregular = true;
      }
    }
    for (const cd& e : ring) {
      UnfoldingBranch b;
      b.mu = mu;
      b.e1 = e;
      b.ring_id = id;
      b.ring_size = static_cast<int>(size);
      b.irregular = irregular;
      out.push_back(b);
    }
    ++id;
  }
  return out;
}

RingPrediction predict_ring_counts(int particles, int k) {
  if (particles < 1 || k < 1) throw std::invalid_argument("predict_ring_counts needs N >= 1 and k >= 1");
  const int n = particles + 1;
  if (k >= particles) return {1, n, 0};
  const int p = n / (k + 1);
  return {p, k + 1, n - p * (k + 1)};
}

RingCensus census(const RingPrediction& prediction) {
  RingCensus c;
  if (prediction.ring_count > 0) c[prediction.ring_size] += prediction.ring_count;
  if (prediction.remainder > 0) c[1] += prediction.remainder;
  return c;
}

bool ring_law_holds(const RingCensus& observed, const RingPrediction& prediction) {
  int big = 0;
  int rest = 0;
  for (const auto& [size, count] : observed) {
    if (size == prediction.ring_size) {
      big += count;
    } else if (size < prediction.ring_size) {
      rest += size * count;
    } else {
      return false;
    }
  }
  return big == prediction.ring_count && rest == prediction.remainder;
}

RingCensus NewtonDiagram::census() const {
  RingCensus c;
  std::map<int, int> seen;  // ring id -> size
  for (const auto& b : branches) {
    if (b.identically_zero) {
      c[1] += 1;
    } else {
      seen[b.ring_id] = b.ring_size;
    }
  }
  for (const auto& [id, size] : seen) c[size] += 1;
  return c;
}

bool NewtonDiagram::has_irregular_ring() const {
  return std::any_of(branches.begin(), branches.end(), [](const UnfoldingBranch& b) { return b.irregular; });
}

NewtonDiagram analyze_unfolding(const CharPoly& cp, const RingTolerances& tol) {
  NewtonDiagram d;
  d.points = build_points(cp);
  d.segments = lower_hull(d.points);
  const int k_first = d.points.front().k;
  int ring_id = 0;
  for (int i = 0; i < k_first; ++i) {
    UnfoldingBranch b;
    b.ring_id = ring_id++;
    b.identically_zero = true;
    d.branches.push_back(b);
  }
  int covered = k_first;
  for (const auto& seg : d.segments) {
    if (seg.k_min() != covered) throw std::logic_error("hull segments are not contiguous");
    d.reduced.push_back(reduced_polynomial(seg));
    auto roots = solve_leading_coefficients(d.reduced.back());
    if (static_cast<int>(roots.size()) != seg.k_max() - seg.k_min()) {
      throw std::logic_error("reduced polynomial root count does not match the segment width");
    }
    auto rings = group_rings(roots, seg.mu, ring_id, tol);
    for (const auto& b : rings) ring_id = std::max(ring_id, b.ring_id + 1);
    d.branches.insert(d.branches.end(), rings.begin(), rings.end());
    covered = seg.k_max();
  }
  return d;
}

}  // namespace epspectra
