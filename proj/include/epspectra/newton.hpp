#pragma once

// Newton polygon of a characteristic polynomial in (lambda, c): leading
// Puiseux exponents mu, leading coefficients e1 (lambda ~ e1 c^mu) and their
// grouping into rings.

#include <complex>
#include <map>
#include <vector>

#include "epspectra/charpoly.hpp"

namespace epspectra {

/// Point (k, a_k): k is the power of lambda in det(lambda I - H), a_k the
/// lowest power of c in its coefficient, f_k that term's coefficient.
struct DiagramPoint {
  int k = 0;
  int a = 0;
  GaussianRational f;
};

/// Lower-hull segment with negative slope. `points` holds every diagram point
/// on the segment, ascending in k; mu = -slope > 0.
struct HullSegment {
  std::vector<DiagramPoint> points;
  Rational mu;

  int k_min() const { return points.front().k; }
  int k_max() const { return points.back().k; }
};

struct UnfoldingBranch {
  Rational mu;
  std::complex<double> e1;
  int ring_id = 0;
  int ring_size = 1;
  /// Phases within the modulus group were not equally spaced.
  bool irregular = false;
  /// Branch with lambda = 0 for every c (a factor lambda of the charpoly).
  bool identically_zero = false;
};

struct RingTolerances {
  double modulus = 1e-6;
  double phase = 1e-9;
};

/// One point per nonzero coefficient, ascending in k.
std::vector<DiagramPoint> build_points(const CharPoly& cp);

/// Negative-slope part of the lower convex hull, left to right, with exact
/// integer arithmetic. Empty when fewer than two points remain. Throws
/// std::invalid_argument for an empty point list.
std::vector<HullSegment> lower_hull(const std::vector<DiagramPoint>& points);

/// sum over the segment's points of f_k e^(k - k_min), ascending in e.
std::vector<GaussianRational> reduced_polynomial(const HullSegment& segment);

/// Nonzero roots of a polynomial (ascending coefficients). When only powers
/// of e^g occur the polynomial is solved in w = e^g and the g-th roots are
/// spread exactly, so ring phases are equally spaced by construction.
/// Throws NumericalError if a root cannot be polished to relative 1e-10.
std::vector<std::complex<double>> solve_leading_coefficients(const std::vector<GaussianRational>& poly);

/// Groups one segment's coefficients into rings: equal modulus (relative
/// tolerance) and equal e^q with q the denominator of mu; a group's phases
/// must be spaced by 2 pi / size, otherwise every member is marked irregular.
/// Ring ids start at `first_ring_id`.
std::vector<UnfoldingBranch> group_rings(const std::vector<std::complex<double>>& coefficients, const Rational& mu,
                                         int first_ring_id = 0, const RingTolerances& tol = {});

struct RingPrediction {
  int ring_count = 0;
  int ring_size = 0;
  int remainder = 0;
};

/// Ring law for an upper (k+1)-Hessenberg perturbation of a nilpotent
/// (N+1)-Jordan block: p = floor((N+1)/(k+1)) rings of size k+1 and
/// r = (N+1) - p(k+1) remaining eigenvalues for k <= N-1; a single
/// (N+1)-ring for k >= N.
RingPrediction predict_ring_counts(int particles, int k);

/// Ring size -> number of rings.
using RingCensus = std::map<int, int>;
/// Prediction with the remainder counted as singles.
RingCensus census(const RingPrediction& prediction);

/// Exactly ring_count rings of size ring_size; the remaining eigenvalues, if
/// any, sit in rings smaller than ring_size and total `remainder`.
bool ring_law_holds(const RingCensus& observed, const RingPrediction& prediction);

struct NewtonDiagram {
  std::vector<DiagramPoint> points;
  std::vector<HullSegment> segments;
  std::vector<std::vector<GaussianRational>> reduced;
  std::vector<UnfoldingBranch> branches;

  /// Observed rings, identically-zero branches counted as singles.
  RingCensus census() const;
  bool has_irregular_ring() const;
};

/// Full first-order analysis. Every one of the dim eigenvalue branches is
/// assigned exactly once (degree accounting is checked; std::logic_error
/// otherwise).
NewtonDiagram analyze_unfolding(const CharPoly& cp, const RingTolerances& tol = {});

}  // namespace epspectra
