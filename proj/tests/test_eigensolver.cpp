#include <doctest.h>

#include <random>

#include "epspectra/charpoly.hpp"
#include "epspectra/eigensolver.hpp"
#include "epspectra/spectra.hpp"
#include "helpers.hpp"

using namespace epspectra;
using testing_support::cd;

namespace {

RealMatrix random_real(std::size_t n, std::mt19937& rng) {
  std::normal_distribution<double> g;
  RealMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = g(rng);
  return m;
}

ComplexMatrix random_complex(std::size_t n, std::mt19937& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = cd(g(rng), g(rng));
  return m;
}

}  // namespace

TEST_SUITE("eigensolver") {
  TEST_CASE("real matrices agree with Eigen") {
    std::mt19937 rng(1);
    for (std::size_t n : {1u, 2u, 3u, 7u, 16u, 25u}) {
      const RealMatrix a = random_real(n, rng);
      const auto ours = eigenvalues(a);
      const auto ref = testing_support::eigen_eigenvalues(testing_support::to_eigen(to_complex(a)));
      CHECK(matched_distance(ours, ref) <= 1e-10 * std::max(1.0, max_abs(a)) * double(n));
      // Real input: conjugate pairs come out exactly conjugate.
      CHECK(matched_distance(ours, [&] {
              auto c = ours;
              for (auto& z : c) z = std::conj(z);
              return c;
            }()) == 0.0);
    }
  }

  TEST_CASE("complex matrices agree with Eigen") {
    std::mt19937 rng(2);
    for (std::size_t n : {1u, 2u, 5u, 12u, 21u}) {
      const ComplexMatrix a = random_complex(n, rng);
      const auto ours = eigenvalues(a);
      const auto ref = testing_support::eigen_eigenvalues(testing_support::to_eigen(a));
      CHECK(matched_distance(ours, ref) <= 1e-10 * std::max(1.0, max_abs(a)) * double(n));
    }
  }

  TEST_CASE("Hessenberg reduction zeroes the lower band and keeps invariants") {
    std::mt19937 rng(3);
    ComplexMatrix a = random_complex(9, rng);
    const ComplexMatrix original = a;
    reduce_to_hessenberg(a);
    double fro_a = 0, fro_o = 0;
    cd tr_a = 0, tr_o = 0;
    for (std::size_t i = 0; i < 9; ++i) {
      tr_a += a(i, i);
      tr_o += original(i, i);
      for (std::size_t j = 0; j < 9; ++j) {
        if (i > j + 1) CHECK(a(i, j) == cd(0));
        fro_a += std::norm(a(i, j));
        fro_o += std::norm(original(i, j));
      }
    }
    CHECK(std::abs(tr_a - tr_o) < 1e-12);
    CHECK(std::abs(fro_a - fro_o) < 1e-10 * fro_o);

    RealMatrix r = random_real(8, rng);
    reduce_to_hessenberg(r);
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j + 1 < i; ++j) CHECK(r(i, j) == 0.0);
  }

  TEST_CASE("balancing is a diagonal similarity") {
    RealMatrix a(3, 3);
    a(0, 0) = 1;
    a(0, 1) = 1e6;
    a(1, 0) = 1e-6;
    a(1, 1) = 2;
    a(1, 2) = 1e4;
    a(2, 1) = 1e-4;
    a(2, 2) = 3;
    RealMatrix b = a;
    balance(b);
    for (std::size_t i = 0; i < 3; ++i) CHECK(b(i, i) == a(i, i));
    CHECK(max_abs(b) < 10.0);
    CHECK(matched_distance(eigenvalues(a), testing_support::eigen_eigenvalues(testing_support::to_eigen(to_complex(a)))) < 1e-9);
  }

  TEST_CASE("backward stability on the model Hamiltonian") {
    for (double gamma : {0.3, 0.9, 1.6}) {
      ModelParams p;
      p.particles = 11;
      p.v = 1.0;
      p.gamma = gamma;
      p.c = 0.3;
      const auto h = testing_support::to_eigen(build_hamiltonian(p, Basis::orthonormal).numeric());
      const double norm = h.operatorNorm();
      for (const auto& lambda : compute_spectrum(p).eigenvalues) {
        const Eigen::MatrixXcd shifted = h - lambda * Eigen::MatrixXcd::Identity(h.rows(), h.cols());
        CHECK(testing_support::smallest_singular_value(shifted) <= 1e-10 * norm);
      }
    }
  }

  TEST_CASE("polynomial roots agree with the Aberth oracle") {
    std::mt19937 rng(4);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 10; ++trial) {
      const bool real = trial % 2 == 0;
      std::vector<std::complex<long double>> coeffs;
      std::vector<cd> plain;
      for (int k = 0; k <= 10; ++k) {
        const cd z(g(rng), real ? 0.0 : g(rng));
        coeffs.emplace_back(z.real(), z.imag());
        plain.push_back(z);
      }
      const auto ours = polynomial_roots(coeffs);
      const auto ref = testing_support::aberth_roots(plain);
      REQUIRE(ours.size() == 10);
      CHECK(matched_distance(ours, ref) < 1e-9);
    }
  }

  TEST_CASE("polynomial roots: simple cases and errors") {
    // (x - 1)(x + 2)(x - 3i) expanded: x^3 + (1 - 3i) x^2 + (-2 - 3i) x + 6i
    using cl = std::complex<long double>;
    const std::vector<cl> p = {cl(0, 6), cl(-2, -3), cl(1, -3), cl(1, 0)};
    const auto roots = polynomial_roots(p);
    CHECK(matched_distance(roots, {cd(1, 0), cd(-2, 0), cd(0, 3)}) < 1e-13);
    CHECK(std::abs(evaluate_polynomial(p, cl(1, 0))) < 1e-15L);
    // Trailing zero leading coefficients are dropped.
    CHECK(polynomial_roots({cl(-4), cl(0), cl(1), cl(0)}).size() == 2);
    CHECK_THROWS_AS(polynomial_roots({cl(0), cl(0)}), std::invalid_argument);
  }

  TEST_CASE("N=5 spectrum matches companion roots of the exact charpoly") {
    ModelParams p;
    p.particles = 5;
    p.v = 1.0;
    p.gamma = 1.0;
    p.c = 0.02;
    const CharPoly cp = substitute(faddeev_leverrier(build_exact_pt_hamiltonian(5, Rational(1), Rational(1))),
                                   GaussianRational(Rational(1, 50)));
    std::vector<cd> coeffs;
    for (std::size_t k = 0; k <= cp.dim; ++k) coeffs.push_back(cp.monic(k).coefficient(0).to_complex());
    CHECK(matched_distance(compute_spectrum(p).eigenvalues, testing_support::aberth_roots(coeffs)) <= 1e-8);
  }

  TEST_CASE("sorting is by real part then imaginary part") {
    std::vector<cd> v = {cd(1, 2), cd(-1, 0), cd(1, -2), cd(0, 5)};
    sort_eigenvalues(v);
    CHECK(v == std::vector<cd>{cd(-1, 0), cd(0, 5), cd(1, -2), cd(1, 2)});
  }
}
