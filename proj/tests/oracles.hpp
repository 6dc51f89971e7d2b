#pragma once

// Independent brute-force references used as test oracles. None of these
// share code paths with the library beyond the storage types.

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "finosc/grid.hpp"

namespace oracle {

using finosc::Complex;
using finosc::GridDim;
using finosc::GridFunction;
using finosc::LinearOperator;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

inline int mod(long long n, int d) {
  long long r = n % d;
  return static_cast<int>(r < 0 ? r + d : r);
}

// Periodic read of a vector stored as psi[n + j].
inline Complex at(const GridFunction& psi, long long n) {
  const int d = psi.dim().d(), j = psi.dim().j();
  return psi.values()[mod(n + j, d)];
}

inline GridFunction dft(const GridFunction& psi, double sign = -1.0) {
  const GridDim dim = psi.dim();
  const int d = dim.d(), j = dim.j();
  finosc::Vector out(d);
  for (int k = -j; k <= j; ++k) {
    Complex acc = 0;
    for (int n = -j; n <= j; ++n) acc += std::polar(1.0, sign * 2 * kPi * k * n / d) * at(psi, n);
    out[k + j] = acc / std::sqrt(double(d));
  }
  return GridFunction(dim, out);
}

// W(n, m) as a plain (n + j, m + j) indexed matrix.
inline Eigen::MatrixXcd wigner(const GridFunction& psi) {
  const int d = psi.dim().d(), j = psi.dim().j();
  Eigen::MatrixXcd w(d, d);
  for (int n = -j; n <= j; ++n) {
    for (int m = -j; m <= j; ++m) {
      Complex acc = 0;
      for (int k = -j; k <= j; ++k) {
        acc += std::polar(1.0, 4 * kPi * m * k / d) * at(psi, n - k) * std::conj(at(psi, n + k));
      }
      w(n + j, m + j) = acc / double(d);
    }
  }
  return w;
}

// Exact binomial by the multiplicative formula in long double.
inline long double binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

// Coefficients of (1 - X)^a (1 + X)^b by repeated polynomial multiplication.
inline std::vector<long double> generating_polynomial(int a, int b) {
  std::vector<long double> p{1};
  auto mul = [&](long double c1) {
    std::vector<long double> q(p.size() + 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i] += p[i];
      q[i + 1] += c1 * p[i];
    }
    p = q;
  };
  for (int i = 0; i < a; ++i) mul(-1);
  for (int i = 0; i < b; ++i) mul(1);
  return p;
}

inline double kravchuk_poly(int j, int m, int n) {
  return static_cast<double>(generating_polynomial(j + n, j - n)[static_cast<std::size_t>(j + m)]);
}

// Lattice sums over a fixed, generous window.
inline double g_lattice(int d, double kappa, int n, double offset, bool alternate) {
  double acc = 0;
  for (int a = -60; a <= 60; ++a) {
    const double x = (a + offset) * d + n;
    const double t = std::exp(-kappa * kPi * x * x / d);
    acc += (alternate && (a % 2 != 0)) ? -t : t;
  }
  return acc;
}

inline double g1(int d, double kappa, int n) { return g_lattice(d, kappa, n, 0.0, false); }
inline double g2(int d, double kappa, int n) { return g_lattice(d, kappa, n, 0.5, false); }
inline double g3(int d, double kappa, int n) {
  return (n % 2 == 0 ? 1.0 : -1.0) * g_lattice(d, kappa, n, 0.0, true);
}
inline double g4(int j, int n) {
  return static_cast<double>(binom(2 * j, j + n) / std::pow(4.0L, j));
}
inline double g5(int d, int n) {
  return std::pow(std::cos(n * kPi / d), d - 1) / std::sqrt(double(d));
}

inline GridFunction random_vector(GridDim dim, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> nd;
  return GridFunction::from_fn(dim, [&](int) { return Complex(nd(rng), nd(rng)); });
}

inline LinearOperator random_hermitian(GridDim dim, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> nd;
  Eigen::MatrixXcd a(dim.size(), dim.size());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) a(r, c) = Complex(nd(rng), nd(rng));
  }
  return LinearOperator(dim, 0.5 * (a + a.adjoint()));
}

inline Eigen::VectorXd eigenvalues(const LinearOperator& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m.matrix());
  return es.eigenvalues();
}

}  // namespace oracle
