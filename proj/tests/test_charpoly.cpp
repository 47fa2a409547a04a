#include <doctest.h>

#include <random>

#include "epspectra/charpoly.hpp"
#include "epspectra/spectra.hpp"
#include "helpers.hpp"

using namespace epspectra;

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

ParamPoly term(const Rational& coeff, int exponent) { return ParamPoly::monomial(GaussianRational(coeff), exponent); }

// det(lambda I - A) by Gaussian elimination over the Gaussian rationals.
GaussianRational exact_det_shifted(const ExactMatrix& a, const GaussianRational& lambda) {
  const std::size_t n = a.rows();
  std::vector<std::vector<GaussianRational>> m(n, std::vector<GaussianRational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      REQUIRE(a(i, j).degree() <= 0);
      m[i][j] = -a(i, j).coefficient(0);
      if (i == j) m[i][j] += lambda;
    }
  GaussianRational det(1L);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return GaussianRational(0L);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const GaussianRational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

}  // namespace

TEST_SUITE("charpoly") {
  TEST_CASE("N=1 by hand") {
    // H = diag(i gamma + c/2, -i gamma + c/2) + v sigma_x, so
    // det(lambda - H) = (lambda - c/2)^2 - (v^2 - gamma^2).
    const Rational gamma = q(1, 2), v = q(1);
    const CharPoly cp = faddeev_leverrier(build_exact_pt_hamiltonian(1, gamma, v));
    CHECK(cp.monic(2) == ParamPoly(1L));
    CHECK(cp.monic(1) == term(q(-1), 1));
    CHECK(cp.monic(0) == term(q(1, 4), 2) + term(gamma * gamma - v * v, 0));
    CHECK(cp.p[0] == ParamPoly(-1L));
  }

  TEST_CASE("N=5 at gamma = v = 1 matches the printed expansion") {
    const CharPoly cp = faddeev_leverrier(build_exact_pt_hamiltonian(5, q(1), q(1)));
    CHECK(cp.monic(5) == term(q(-35), 1));
    CHECK(cp.monic(4) == term(q(1743, 4), 2));
    CHECK(cp.monic(3) == term(q(448), 1) + term(q(-4645, 2), 3));
    CHECK(cp.monic(2) == term(q(-6112), 2) + term(q(82831, 16), 4));
    CHECK(cp.monic(1) == term(q(27280), 3) + term(q(-58275, 16), 5));
    CHECK(cp.monic(0) == term(q(6400), 2) + term(q(-30600), 4) + term(q(50625, 64), 6));
  }

  TEST_CASE("c = 0 at gamma = v leaves lambda^(N+1)") {
    for (int n = 1; n <= 9; ++n) {
      const CharPoly cp = substitute(faddeev_leverrier(build_rotated_hamiltonian(n, q(2, 3), 2)), GaussianRational(0L));
      for (std::size_t k = 0; k < cp.dim; ++k) CHECK(cp.monic(k).is_zero());
      CHECK(cp.monic(cp.dim) == ParamPoly(1L));
    }
  }

  TEST_CASE("Newton identities reproduce the traces") {
    for (int n = 1; n <= 8; ++n) {
      const CharPoly cp = faddeev_leverrier(build_exact_pt_hamiltonian(n, q(1, 3), q(1)));
      const auto s = power_sums_from_coefficients(cp.p);
      for (std::size_t k = 1; k <= cp.dim; ++k) CHECK(s[k] == cp.s[k]);
    }
  }

  TEST_CASE("charpoly equals det(lambda I - H) at rational points") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int n = 1; n <= 6; ++n) {
      const CharPoly cp = faddeev_leverrier(build_exact_pt_hamiltonian(n, q(2, 5), q(1)));
      const GaussianRational c(q(d(rng), 7));
      const ExactMatrix h = substitute(build_exact_pt_hamiltonian(n, q(2, 5), q(1)).exact(), c);
      const CharPoly at_c = substitute(cp, c);
      for (int trial = 0; trial < 3; ++trial) {
        const GaussianRational lambda(q(d(rng), 3), q(d(rng), 5));
        GaussianRational value;
        GaussianRational power(1L);
        for (std::size_t k = 0; k <= cp.dim; ++k) {
          value += at_c.monic(k).coefficient(0) * power;
          power *= lambda;
        }
        CHECK(value == exact_det_shifted(h, lambda));
      }
    }
  }

  TEST_CASE("exact-charpoly roots agree with floating eigenvalues over random draws") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> pick_n(1, 8);
    std::uniform_int_distribution<int> num(0, 40);
    for (int draw = 0; draw < 20; ++draw) {
      const int n = pick_n(rng);
      const Rational v = q(10 + num(rng), 20);
      const Rational gamma = q(num(rng), 20);
      const Rational c = q(num(rng), 80);
      const CharPoly cp = substitute(faddeev_leverrier(build_exact_pt_hamiltonian(n, gamma, v)), GaussianRational(c));
      std::vector<testing_support::cd> coeffs;
      for (std::size_t k = 0; k <= cp.dim; ++k) coeffs.push_back(cp.monic(k).coefficient(0).to_complex());
      const auto roots = testing_support::aberth_roots(coeffs);
      ModelParams p;
      p.particles = n;
      p.v = to_double(v);
      p.gamma = to_double(gamma);
      p.c = to_double(c);
      const auto eigs = testing_support::eigen_eigenvalues(testing_support::to_eigen(build_hamiltonian(p, Basis::orthonormal).numeric()));
      // Loose enough for a nearby second-order EP (square-root conditioning).
      CHECK(matched_distance(roots, eigs) <= 1e-6 * spectral_scale(p));
    }
  }

  TEST_CASE("PT charpolys are real; a non-PT detuning is not") {
    for (int n = 1; n <= 7; ++n) CHECK(realness_check(faddeev_leverrier(build_exact_pt_hamiltonian(n, q(3, 4), q(1)))));
    const GaussianRational eps(q(1, 2), q(-1));
    CHECK_FALSE(realness_check(faddeev_leverrier(build_exact_hamiltonian(3, eps, q(1)))));
  }

  TEST_CASE("trace structure holds at gamma = v and fails elsewhere") {
    for (int n = 1; n <= 10; ++n) {
      const auto report = verify_trace_structure(faddeev_leverrier(build_rotated_hamiltonian(n, q(1), 2)));
      for (std::size_t k = 1; k < report.p_terms.size(); ++k)
        for (const auto& e : report.p_terms[k]) CHECK(3 * e.j <= static_cast<int>(k));
    }
    CHECK_THROWS_AS(verify_trace_structure(faddeev_leverrier(build_exact_pt_hamiltonian(4, q(1, 2), q(1)))),
                    std::logic_error);
  }

  TEST_CASE("float input is rejected") {
    ModelParams p;
    CHECK_THROWS_AS(faddeev_leverrier(build_hamiltonian(p, Basis::orthonormal)), std::invalid_argument);
  }

  TEST_CASE("text rendering") {
    const CharPoly cp = faddeev_leverrier(build_exact_pt_hamiltonian(1, q(1), q(1)));
    CHECK(format_monic(cp) == "q[2] = 1/1 * c^0\nq[1] = -1/1 * c^1\nq[0] = 1/4 * c^2\n");
    CHECK(format_coefficients(cp) == "p[0] = -1/1 * c^0\np[1] = 1/1 * c^1\np[2] = -1/4 * c^2\n");
  }
}
