#include <doctest.h>

#include <numbers>

#include "epspectra/errors.hpp"
#include "epspectra/newton.hpp"
#include "epspectra/spectra.hpp"

using namespace epspectra;
using cd = std::complex<double>;

namespace {

DiagramPoint pt(int k, int a) { return {k, a, GaussianRational(1L)}; }

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

NewtonDiagram rotated(int n, int k, const Rational& v = Rational(1)) {
  return analyze_unfolding(faddeev_leverrier(build_rotated_hamiltonian(n, v, k)));
}

}  // namespace

TEST_SUITE("newton") {
  TEST_CASE("lower hull keeps negative slopes only") {
    const auto segs = lower_hull({pt(0, 4), pt(1, 1), pt(2, 2), pt(3, 0), pt(4, 0)});
    REQUIRE(segs.size() == 2);
    CHECK(segs[0].mu == q(3));
    CHECK(segs[0].k_min() == 0);
    CHECK(segs[0].k_max() == 1);
    CHECK(segs[1].mu == q(1, 2));
    CHECK(segs[1].points.size() == 2);
    CHECK(segs[1].k_max() == 3);
  }

  TEST_CASE("collinear points stay on one segment") {
    const auto segs = lower_hull({pt(0, 2), pt(1, 1), pt(2, 0)});
    REQUIRE(segs.size() == 1);
    CHECK(segs[0].points.size() == 3);
    CHECK(segs[0].mu == q(1));
    CHECK(lower_hull({pt(0, 0)}).empty());
    CHECK_THROWS_AS(lower_hull({}), std::invalid_argument);
  }

  TEST_CASE("leading coefficients spread exactly over roots of unity") {
    // e^3 - 8
    const auto roots = solve_leading_coefficients({GaussianRational(-8L), {}, {}, GaussianRational(1L)});
    REQUIRE(roots.size() == 3);
    for (const auto& r : roots) CHECK(std::abs(r) == doctest::Approx(2.0).epsilon(1e-14));
    const auto rings = group_rings(roots, q(1, 3));
    for (const auto& b : rings) {
      CHECK(b.ring_size == 3);
      CHECK_FALSE(b.irregular);
    }
    CHECK_THROWS_AS(solve_leading_coefficients({GaussianRational{}, GaussianRational{}}), std::invalid_argument);
    // Zero roots are dropped: e^2 (e - 1).
    CHECK(solve_leading_coefficients({{}, {}, GaussianRational(-1L), GaussianRational(1L)}).size() == 1);
  }

  TEST_CASE("ring grouping separates moduli and flags uneven phases") {
    const double third = 2.0 * std::numbers::pi / 3.0;
    auto rings = group_rings({cd(1, 0), std::polar(1.0, third), std::polar(1.0, 2 * third), cd(-2, 0)}, q(1, 3));
    int size3 = 0, size1 = 0;
    for (const auto& b : rings) (b.ring_size == 3 ? size3 : size1) += 1;
    CHECK(size3 == 3);
    CHECK(size1 == 1);

    rings = group_rings({cd(1, 0), std::polar(1.0, third + 1e-8), std::polar(1.0, 2 * third)}, q(1, 3));
    CHECK(rings.front().ring_size == 3);
    CHECK(rings.front().irregular);
  }

  TEST_CASE("ring prediction table") {
    auto same = [](RingPrediction a, RingPrediction b) {
      return a.ring_count == b.ring_count && a.ring_size == b.ring_size && a.remainder == b.remainder;
    };
    CHECK(same(predict_ring_counts(5, 2), {2, 3, 0}));
    CHECK(same(predict_ring_counts(10, 2), {3, 3, 2}));
    CHECK(same(predict_ring_counts(4, 3), {1, 4, 1}));
    CHECK(same(predict_ring_counts(4, 4), {1, 5, 0}));
    CHECK(same(predict_ring_counts(4, 9), {1, 5, 0}));
    CHECK(same(predict_ring_counts(7, 1), {4, 2, 0}));
    CHECK_THROWS_AS(predict_ring_counts(0, 1), std::invalid_argument);
    CHECK(census(predict_ring_counts(10, 2)) == RingCensus{{1, 2}, {3, 3}});
  }

  TEST_CASE("ring law accepts any split of the remainder into smaller rings") {
    const RingPrediction pred = predict_ring_counts(11, 3);  // 3 x 4, remainder 0
    CHECK(ring_law_holds({{4, 3}}, pred));
    CHECK_FALSE(ring_law_holds({{4, 2}, {2, 2}}, pred));
    const RingPrediction with_rest = predict_ring_counts(12, 3);  // 3 x 4, remainder 1
    CHECK(ring_law_holds({{4, 3}, {1, 1}}, with_rest));
    const RingPrediction two_left = predict_ring_counts(10, 2);  // 3 x 3, remainder 2
    CHECK(ring_law_holds({{3, 3}, {2, 1}}, two_left));
    CHECK(ring_law_holds({{3, 3}, {1, 2}}, two_left));
    CHECK_FALSE(ring_law_holds({{3, 3}, {5, 1}}, two_left));
  }

  TEST_CASE("N=5 diagram") {
    const NewtonDiagram d = rotated(5, 2);
    REQUIRE(d.points.size() == 7);
    const int expected_a[] = {2, 3, 2, 1, 2, 1, 0};
    for (int k = 0; k <= 6; ++k) {
      CHECK(d.points[k].k == k);
      CHECK(d.points[k].a == expected_a[k]);
    }
    REQUIRE(d.segments.size() == 1);
    CHECK(d.segments[0].mu == q(1, 3));
    CHECK(d.census() == RingCensus{{3, 2}});
    CHECK_FALSE(d.has_irregular_ring());
  }

  TEST_CASE("N=10 linear branches are half the printed coefficients") {
    const NewtonDiagram d = rotated(10, 2);
    REQUIRE(d.segments.size() == 2);
    CHECK(d.segments[0].mu == q(1));
    CHECK(d.segments[1].mu == q(1, 3));
    const auto& r = d.reduced[0];
    REQUIRE(r.size() == 3);
    CHECK(r[0] == GaussianRational(Rational(1049407488000L)));
    CHECK(r[1] == GaussianRational(Rational(-150651187200L)));
    CHECK(r[2] == GaussianRational(Rational(5802969600L)));
    // The printed quadratic is -32 P(e/2).
    CHECK(r[2] * GaussianRational(-8L) == GaussianRational(Rational(-46423756800L)));
    CHECK(r[1] * GaussianRational(-16L) == GaussianRational(Rational(2410418995200L)));
    CHECK(r[0] * GaussianRational(-32L) == GaussianRational(Rational(-33581039616000L)));
    CHECK(d.census() == RingCensus{{1, 2}, {3, 3}});
  }

  TEST_CASE("ring invariants: equal moduli and 2 pi / size spacing") {
    for (int n : {5, 8, 11}) {
      for (int k : {1, 2, 3}) {
        const NewtonDiagram d = rotated(n, k);
        std::map<int, std::vector<cd>> rings;
        for (const auto& b : d.branches)
          if (!b.identically_zero) rings[b.ring_id].push_back(b.e1);
        for (const auto& [id, members] : rings) {
          const double r0 = std::abs(members.front());
          for (const auto& e : members) CHECK(std::abs(std::abs(e) - r0) <= 1e-9 * r0);
          if (members.size() > 1) {
            std::vector<double> phases;
            for (const auto& e : members) phases.push_back(std::arg(e / members.front()));
            for (auto& ph : phases)
              if (ph < -1e-12) ph += 2 * std::numbers::pi;
            std::sort(phases.begin(), phases.end());
            const double step = 2 * std::numbers::pi / double(members.size());
            for (std::size_t i = 0; i < phases.size(); ++i) CHECK(std::abs(phases[i] - step * double(i)) <= 1e-9);
          }
        }
      }
    }
  }

  TEST_CASE("ring law for N <= 9") {
    for (int n = 1; n <= 9; ++n)
      for (int k = 1; k <= n; ++k) {
        const NewtonDiagram d = rotated(n, k);
        CHECK(ring_law_holds(d.census(), predict_ring_counts(n, k)));
      }
  }

  TEST_CASE("perturbation power N+1 splits off a single eigenvalue") {
    // (L+ - L-)^(N+1) has no matrix element between the two ends of the
    // chain (odd step parity), so the corner that closes the (N+1)-ring is zero.
    for (int n = 2; n <= 9; ++n) {
      const NewtonDiagram d = rotated(n, n + 1);
      const RingCensus expected = {{1, 1}, {n, 1}};
      CHECK(d.census() == expected);
      CHECK_FALSE(ring_law_holds(d.census(), predict_ring_counts(n, n + 1)));
    }
  }

  TEST_CASE("leading coefficients agree with numerical eigenvalues") {
    // lambda(c) / c^mu -> e1 as c -> 0.
    for (int n : {5, 11}) {
      const NewtonDiagram d = rotated(n, 2);
      std::vector<cd> e1;
      for (const auto& b : d.branches) e1.push_back(b.e1);
      ModelParams p;
      p.particles = n;
      p.v = 1.0;
      p.gamma = 1.0;
      p.c = 1e-7;
      auto eigs = compute_spectrum(p).eigenvalues;
      for (auto& z : eigs) z /= std::cbrt(p.c);
      double largest = 0;
      for (const auto& e : e1) largest = std::max(largest, std::abs(e));
      CHECK(matched_distance(eigs, e1) <= 0.02 * largest);
    }
    // Linear branches of N=10.
    const NewtonDiagram d10 = rotated(10, 2);
    std::vector<cd> linear;
    for (const auto& b : d10.branches)
      if (b.mu == q(1)) linear.push_back(b.e1);
    ModelParams p;
    p.particles = 10;
    p.gamma = 1.0;
    p.c = 1e-6;
    auto eigs = compute_spectrum(p).eigenvalues;
    std::sort(eigs.begin(), eigs.end(), [](cd a, cd b) { return std::abs(a) < std::abs(b); });
    std::vector<cd> smallest = {eigs[0] / p.c, eigs[1] / p.c};
    CHECK(matched_distance(smallest, linear) <= 0.01 * std::abs(linear[0]));
  }

  TEST_CASE("detuning unfolds with square-root branches") {
    // lambda_n = n sqrt(v^2 - gamma^2) ~ +-i n sqrt(2 v delta) for gamma = v + delta.
    for (int n : {3, 4, 7}) {
      const Rational v(2);
      const NewtonDiagram d = analyze_unfolding(faddeev_leverrier(build_detuned_hamiltonian(n, v)));
      CHECK(ring_law_holds(d.census(), predict_ring_counts(n, 1)));
      std::vector<cd> expected;
      for (int m = -n; m <= n; m += 2) expected.push_back(cd(0.0, m * 2.0));
      std::vector<cd> got;
      for (const auto& b : d.branches) {
        if (!b.identically_zero) CHECK(b.mu == q(1, 2));
        got.push_back(b.e1);
      }
      CHECK(matched_distance(got, expected) < 1e-12);
    }
  }
}
