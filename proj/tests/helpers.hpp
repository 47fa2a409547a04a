#pragma once

// Shared oracles for the unit tests. Nothing here calls the library's own
// eigensolver or root finder.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "epspectra/matrix.hpp"

namespace testing_support {

using cd = std::complex<double>;

inline Eigen::MatrixXcd to_eigen(const epspectra::ComplexMatrix& m) {
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
  return out;
}

inline Eigen::MatrixXd to_eigen(const epspectra::RealMatrix& m) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
  return out;
}

inline std::vector<cd> eigen_eigenvalues(const Eigen::MatrixXcd& m) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  std::vector<cd> out(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
  return out;
}

inline double smallest_singular_value(const Eigen::MatrixXcd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

/// Aberth-Ehrlich simultaneous iteration; coefficients ascending.
inline std::vector<cd> aberth_roots(std::vector<cd> coeffs) {
  while (coeffs.size() > 1 && coeffs.back() == cd(0)) coeffs.pop_back();
  const std::size_t n = coeffs.size() - 1;
  std::vector<cd> roots(n);
  double radius = 0.0;
  for (std::size_t k = 0; k < n; ++k) radius = std::max(radius, std::pow(std::abs(coeffs[k] / coeffs[n]), 1.0 / double(n - k)));
  for (std::size_t k = 0; k < n; ++k) roots[k] = std::polar(radius, 2.0 * M_PI * (k + 0.25) / double(n));
  auto eval = [&](cd x, cd& d) {
    cd p = coeffs[n];
    d = 0.0;
    for (std::size_t k = n; k-- > 0;) {
      d = d * x + p;
      p = p * x + coeffs[k];
    }
    return p;
  };
  for (int iter = 0; iter < 500; ++iter) {
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      cd d;
      const cd p = eval(roots[i], d);
      if (p == cd(0)) continue;
      const cd ratio = p / d;
      cd sum = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) sum += 1.0 / (roots[i] - roots[j]);
      const cd step = ratio / (1.0 - ratio * sum);
      roots[i] -= step;
      change = std::max(change, std::abs(step) / std::max(1.0, std::abs(roots[i])));
    }
    if (change < 1e-15) break;
  }
  return roots;
}

}  // namespace testing_support
