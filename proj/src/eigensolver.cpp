#include "epspectra/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "epspectra/errors.hpp"

namespace epspectra {

namespace {

using cd = std::complex<double>;

double magnitude(double x) { return std::abs(x); }
double magnitude(const cd& z) { return std::abs(z.real()) + std::abs(z.imag()); }

// Row/column norm balancing with exact ratios sqrt(r/c) rather than powers of
// two. Radix-2 steps leave up to a factor 4 of imbalance per entry pair, which
// compounds along the chain of a nearly defective tridiagonal matrix.
template <typename T>
void balance_impl(Matrix<T>& a) {
  const std::size_t n = a.rows();
  for (int sweep = 0; sweep < 200; ++sweep) {
    bool done = true;
    for (std::size_t i = 0; i < n; ++i) {
      double c = 0.0;
      double r = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        c += magnitude(a(j, i));
        r += magnitude(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      const double s = c + r;
      const double f = std::sqrt(r / c);
      if ((c * f + r / f) < 0.999 * s) {
        done = false;
        const double inv = 1.0 / f;
        for (std::size_t j = 0; j < n; ++j) a(i, j) *= inv;
        for (std::size_t j = 0; j < n; ++j) a(j, i) *= f;
      }
    }
    if (done) return;
  }
}

double conj_if_complex(double x) { return x; }
cd conj_if_complex(const cd& z) { return std::conj(z); }

// Householder reduction; the reflector for column k maps x to alpha e_1 with
// alpha = -phase(x_0) |x|.
template <typename T>
void hessenberg_impl(Matrix<T>& a) {
  const std::size_t n = a.rows();
  if (n < 3) return;
  std::vector<T> u(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double scale = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) scale += magnitude(a(i, k));
    if (scale == 0.0) continue;
    double norm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      u[i] = a(i, k) / scale;
      norm2 += std::norm(u[i]);
    }
    const double norm = std::sqrt(norm2);
    T phase{1.0};
    if (std::abs(u[k + 1]) != 0.0) phase = u[k + 1] / std::abs(u[k + 1]);
    const T alpha = -phase * norm;
    u[k + 1] -= alpha;
    double unorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) unorm2 += std::norm(u[i]);
    if (unorm2 == 0.0) continue;
    const double beta = 2.0 / unorm2;

    // Left: A <- (I - beta u u*) A on rows k+1.., columns k..
    for (std::size_t j = k; j < n; ++j) {
      T dot{};
      for (std::size_t i = k + 1; i < n; ++i) dot += conj_if_complex(u[i]) * a(i, j);
      dot *= beta;
      for (std::size_t i = k + 1; i < n; ++i) a(i, j) -= u[i] * dot;
    }
    // Right: A <- A (I - beta u u*) on all rows, columns k+1..
    for (std::size_t i = 0; i < n; ++i) {
      T dot{};
      for (std::size_t j = k + 1; j < n; ++j) dot += a(i, j) * u[j];
      dot *= beta;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= dot * conj_if_complex(u[j]);
    }
    a(k + 1, k) = alpha * scale;
    for (std::size_t i = k + 2; i < n; ++i) a(i, k) = T{};
  }
}

}  // namespace

void balance(RealMatrix& a) { balance_impl(a); }
void balance(ComplexMatrix& a) { balance_impl(a); }
void reduce_to_hessenberg(RealMatrix& a) { hessenberg_impl(a); }
void reduce_to_hessenberg(ComplexMatrix& a) { hessenberg_impl(a); }

// Francis double-shift QR after the Algol procedure hqr (Martin, Peters and
// Wilkinson), zero-based and without the balancing index range.
std::vector<cd> hessenberg_eigenvalues(RealMatrix& h) {
  const int n = static_cast<int>(h.rows());
  std::vector<cd> out(static_cast<std::size_t>(n));
  if (n == 0) return out;
  auto H = [&](int i, int j) -> double& { return h(static_cast<std::size_t>(i), static_cast<std::size_t>(j)); };
  auto set = [&](int i, double re, double im) { out[static_cast<std::size_t>(i)] = cd(re, im); };

  double norm = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = std::max(i - 1, 0); j < n; ++j) norm += std::abs(H(i, j));

  int en = n - 1;
  double t = 0.0;
  int itn = 30 * n;
  while (en >= 0) {
    int its = 0;
    const int na = en - 1;
    const int enm2 = na - 1;
    for (;;) {
      int l = en;
      for (; l > 0; --l) {
        double s = std::abs(H(l - 1, l - 1)) + std::abs(H(l, l));
        if (s == 0.0) s = norm;
        if (s + std::abs(H(l, l - 1)) == s) break;
      }
      double x = H(en, en);
      if (l == en) {
        set(en, x + t, 0.0);
        en = na;
        break;
      }
      double y = H(na, na);
      double w = H(en, na) * H(na, en);
      if (l == na) {
        double p = (y - x) / 2.0;
        double q = p * p + w;
        double zz = std::sqrt(std::abs(q));
        x += t;
        if (q >= 0.0) {
          zz = p + std::copysign(zz, p);
          set(na, x + zz, 0.0);
          set(en, zz != 0.0 ? x - w / zz : x + zz, 0.0);
        } else {
          set(na, x + p, zz);
          set(en, x + p, -zz);
        }
        en = enm2;
        break;
      }
      if (itn == 0) {
        throw NumericalError("real QR iteration did not converge (eigenvalue " + std::to_string(en) + " of " +
                             std::to_string(n) + ")");
      }
      if (its == 10 || its == 20) {
        t += x;
        for (int i = 0; i <= en; ++i) H(i, i) -= x;
        const double s = std::abs(H(en, na)) + std::abs(H(na, enm2));
        x = 0.75 * s;
        y = x;
        w = -0.4375 * s * s;
      }
      ++its;
      --itn;

      int m = enm2;
      double p = 0.0, q = 0.0, r = 0.0;
      for (; m >= l; --m) {
        const double zz = H(m, m);
        r = x - zz;
        double s = y - zz;
        p = (r * s - w) / H(m + 1, m) + H(m, m + 1);
        q = H(m + 1, m + 1) - zz - r - s;
        r = H(m + 2, m + 1);
        s = std::abs(p) + std::abs(q) + std::abs(r);
        p /= s;
        q /= s;
        r /= s;
        if (m == l) break;
        const double tst1 = std::abs(p) * (std::abs(H(m - 1, m - 1)) + std::abs(zz) + std::abs(H(m + 1, m + 1)));
        if (tst1 + std::abs(H(m, m - 1)) * (std::abs(q) + std::abs(r)) == tst1) break;
      }
      for (int i = m + 2; i <= en; ++i) {
        H(i, i - 2) = 0.0;
        if (i != m + 2) H(i, i - 3) = 0.0;
      }

      for (int k = m; k <= na; ++k) {
        const bool notlast = k != na;
        if (k != m) {
          p = H(k, k - 1);
          q = H(k + 1, k - 1);
          r = notlast ? H(k + 2, k - 1) : 0.0;
          x = std::abs(p) + std::abs(q) + std::abs(r);
          if (x == 0.0) continue;
          p /= x;
          q /= x;
          r /= x;
        }
        const double s = std::copysign(std::sqrt(p * p + q * q + r * r), p);
        if (k != m) {
          H(k, k - 1) = -s * x;
        } else if (l != m) {
          H(k, k - 1) = -H(k, k - 1);
        }
        p += s;
        x = p / s;
        y = q / s;
        const double zz = r / s;
        q /= p;
        r /= p;
        const int last_row = std::min(en, k + 3);
        if (!notlast) {
          for (int j = k; j < n; ++j) {
            const double pj = H(k, j) + q * H(k + 1, j);
            H(k, j) -= pj * x;
            H(k + 1, j) -= pj * y;
          }
          for (int i = 0; i <= last_row; ++i) {
            const double pi = x * H(i, k) + y * H(i, k + 1);
            H(i, k) -= pi;
            H(i, k + 1) -= pi * q;
          }
        } else {
          for (int j = k; j < n; ++j) {
            const double pj = H(k, j) + q * H(k + 1, j) + r * H(k + 2, j);
            H(k, j) -= pj * x;
            H(k + 1, j) -= pj * y;
            H(k + 2, j) -= pj * zz;
          }
          for (int i = 0; i <= last_row; ++i) {
            const double pi = x * H(i, k) + y * H(i, k + 1) + zz * H(i, k + 2);
            H(i, k) -= pi;
            H(i, k + 1) -= pi * q;
            H(i, k + 2) -= pi * r;
          }
        }
      }
    }
  }
  return out;
}

// Single-shift QR with Givens rotations and a Wilkinson shift.
std::vector<cd> hessenberg_eigenvalues(ComplexMatrix& h) {
  const int n = static_cast<int>(h.rows());
  std::vector<cd> out(static_cast<std::size_t>(n));
  if (n == 0) return out;
  auto H = [&](int i, int j) -> cd& { return h(static_cast<std::size_t>(i), static_cast<std::size_t>(j)); };
  constexpr double eps = 2.220446049250313e-16;

  double norm = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = std::max(i - 1, 0); j < n; ++j) norm += std::abs(H(i, j));

  struct Rotation {
    cd c;  // a / r
    cd s;  // b / r
  };
  std::vector<Rotation> rotations(static_cast<std::size_t>(n));

  int hi = n - 1;
  int its = 0;
  int budget = 30 * n;
  while (hi >= 0) {
    int l = hi;
    for (; l > 0; --l) {
      double s = std::abs(H(l - 1, l - 1)) + std::abs(H(l, l));
      if (s == 0.0) s = norm;
      if (std::abs(H(l, l - 1)) <= eps * s) {
        H(l, l - 1) = 0.0;
        break;
      }
    }
    if (l == hi) {
      out[static_cast<std::size_t>(hi)] = H(hi, hi);
      --hi;
      its = 0;
      continue;
    }
    if (budget-- == 0) {
      throw NumericalError("complex QR iteration did not converge (eigenvalue " + std::to_string(hi) + " of " +
                           std::to_string(n) + ")");
    }

    cd mu;
    if (its == 10 || its == 20) {
      mu = H(hi, hi) + 0.75 * std::abs(H(hi, hi - 1).real()) + 0.75 * std::abs(H(hi, hi - 1).imag());
    } else {
      const cd a = H(hi - 1, hi - 1);
      const cd b = H(hi - 1, hi);
      const cd c = H(hi, hi - 1);
      const cd d = H(hi, hi);
      const cd half = 0.5 * (a - d);
      const cd disc = std::sqrt(half * half + b * c);
      const cd mu1 = 0.5 * (a + d) + disc;
      const cd mu2 = 0.5 * (a + d) - disc;
      mu = std::abs(mu1 - d) < std::abs(mu2 - d) ? mu1 : mu2;
    }
    ++its;

    for (int i = l; i <= hi; ++i) H(i, i) -= mu;
    for (int k = l; k < hi; ++k) {
      const cd a = H(k, k);
      const cd b = H(k + 1, k);
      const double r = std::hypot(std::abs(a), std::abs(b));
      Rotation g{1.0, 0.0};
      if (r != 0.0) g = {a / r, b / r};
      rotations[static_cast<std::size_t>(k)] = g;
      for (int j = k; j < n; ++j) {
        const cd top = H(k, j);
        const cd bottom = H(k + 1, j);
        H(k, j) = std::conj(g.c) * top + std::conj(g.s) * bottom;
        H(k + 1, j) = -g.s * top + g.c * bottom;
      }
    }
    for (int k = l; k < hi; ++k) {
      const Rotation& g = rotations[static_cast<std::size_t>(k)];
      const int last = std::min(k + 2, hi);
      for (int i = 0; i <= last; ++i) {
        const cd left = H(i, k);
        const cd right = H(i, k + 1);
        H(i, k) = left * g.c + right * g.s;
        H(i, k + 1) = -left * std::conj(g.s) + right * std::conj(g.c);
      }
    }
    for (int i = l; i <= hi; ++i) H(i, i) += mu;
  }
  return out;
}

void sort_eigenvalues(std::vector<cd>& values) {
  std::sort(values.begin(), values.end(), [](const cd& a, const cd& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

std::vector<cd> eigenvalues(const RealMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("eigenvalues of a non-square matrix");
  RealMatrix h = a;
  balance(h);
  reduce_to_hessenberg(h);
  auto values = hessenberg_eigenvalues(h);
  sort_eigenvalues(values);
  return values;
}

std::vector<cd> eigenvalues(const ComplexMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("eigenvalues of a non-square matrix");
  ComplexMatrix h = a;
  balance(h);
  reduce_to_hessenberg(h);
  auto values = hessenberg_eigenvalues(h);
  sort_eigenvalues(values);
  return values;
}

std::complex<long double> evaluate_polynomial(const std::vector<std::complex<long double>>& coeffs,
                                              std::complex<long double> x) {
  std::complex<long double> acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<cd> polynomial_roots(const std::vector<std::complex<long double>>& input) {
  using cld = std::complex<long double>;
  std::vector<cld> coeffs = input;
  while (!coeffs.empty() && coeffs.back() == cld(0)) coeffs.pop_back();
  if (coeffs.empty()) throw std::invalid_argument("roots of the zero polynomial");
  const std::size_t degree = coeffs.size() - 1;
  if (degree == 0) return {};

  const bool real = std::all_of(coeffs.begin(), coeffs.end(), [](const cld& z) { return z.imag() == 0; });
  const cld lead = coeffs.back();
  std::vector<cd> roots;
  if (real) {
    RealMatrix companion(degree, degree);
    for (std::size_t j = 0; j < degree; ++j)
      companion(0, j) = static_cast<double>(-(coeffs[degree - 1 - j] / lead).real());
    for (std::size_t i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
    roots = eigenvalues(companion);
  } else {
    ComplexMatrix companion(degree, degree);
    for (std::size_t j = 0; j < degree; ++j) {
      const cld c = -coeffs[degree - 1 - j] / lead;
      companion(0, j) = cd(static_cast<double>(c.real()), static_cast<double>(c.imag()));
    }
    for (std::size_t i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
    roots = eigenvalues(companion);
  }

  std::vector<cld> derivative(degree);
  for (std::size_t k = 1; k <= degree; ++k) derivative[k - 1] = coeffs[k] * static_cast<long double>(k);
  for (auto& root : roots) {
    cld z(root.real(), root.imag());
    long double residual = std::abs(evaluate_polynomial(coeffs, z));
    for (int step = 0; step < 8 && residual > 0; ++step) {
      const cld slope = evaluate_polynomial(derivative, z);
      if (slope == cld(0)) break;
      const cld next = z - evaluate_polynomial(coeffs, z) / slope;
      const long double next_residual = std::abs(evaluate_polynomial(coeffs, next));
      if (!(next_residual < residual)) break;
      z = next;
      residual = next_residual;
    }
    root = cd(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  }
  sort_eigenvalues(roots);
  return roots;
}

}  // namespace epspectra
