#pragma once

// Kravchuk polynomials K_m(n), the orthonormal Kravchuk functions, the
// Kravchuk transform and the spin-j representation of su(2).

#include <cmath>
#include <span>
#include <string>

#include "finosc/combinatorics.hpp"
#include "finosc/grid.hpp"

namespace finosc {

namespace detail {

inline void require_index(GridDim dim, long long n, const char* what) {
  if (!dim.contains(n)) {
    throw InvalidArgument(std::string(what) + " index " + std::to_string(n) + " outside {-" +
                          std::to_string(dim.j()) + ".." + std::to_string(dim.j()) + "}");
  }
}

}  // namespace detail

// Coefficient of X^{j+m} in (1-X)^{j+n} (1+X)^{j-n}.
inline double kravchuk_polynomial(GridDim dim, int m, int n) {
  detail::require_index(dim, m, "polynomial");
  detail::require_index(dim, n, "argument");
  const int j = dim.j();
  double acc = 0.0;
  for (int k = 0; k <= j + m; ++k) {
    const double term = binomial(j + n, k) * binomial(j - n, j + m - k);
    acc += (k % 2 == 0) ? term : -term;
  }
  return acc;
}

// 2^{-j} sqrt(C(2j, j+n) / C(2j, j+m)) K_m(n)
inline double kravchuk_function(GridDim dim, int m, int n) {
  const int j = dim.j();
  const double k = kravchuk_polynomial(dim, m, n);
  const double log_weight = 0.5 * (log_binomial(2 * j, j + n) - log_binomial(2 * j, j + m)) -
                            j * std::log(2.0);
  return std::exp(log_weight) * k;
}

// Same value through the terminating series
//   2^{-j} sqrt(C(2j,j+m) C(2j,j+n)) 2F1(-j-m, -j-n; -2j; 2),
// which is manifestly symmetric in (m, n).
inline double kravchuk_function_hypergeometric(GridDim dim, int m, int n) {
  detail::require_index(dim, m, "polynomial");
  detail::require_index(dim, n, "argument");
  const int j = dim.j();
  const double a = -(j + m);
  const double b = -(j + n);
  const double c = -2.0 * j;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < std::min(j + m, j + n); ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * 2.0;
    sum += term;
  }
  const double log_weight =
      0.5 * (log_binomial(2 * j, j + m) + log_binomial(2 * j, j + n)) - j * std::log(2.0);
  return std::exp(log_weight) * sum;
}

// Row m, column n hold K_m(n) and the Kravchuk function value, both stored
// at (slot(m), slot(n)).
struct KravchukTable {
  GridDim dim;
  Eigen::MatrixXd poly;
  Eigen::MatrixXd func;

  double polynomial(int m, int n) const { return poly(dim.slot(m), dim.slot(n)); }
  double function(int m, int n) const { return func(dim.slot(m), dim.slot(n)); }

  GridFunction function_row(int m) const {
    return GridFunction(dim, func.row(dim.slot(m)).transpose().cast<Complex>());
  }
};

inline KravchukTable kravchuk_table(GridDim dim) {
  KravchukTable t{dim, Eigen::MatrixXd(dim.size(), dim.size()),
                  Eigen::MatrixXd(dim.size(), dim.size())};
  for (int m : dim.indices()) {
    for (int n : dim.indices()) {
      t.poly(dim.slot(m), dim.slot(n)) = kravchuk_polynomial(dim, m, n);
      t.func(dim.slot(m), dim.slot(n)) = kravchuk_function(dim, m, n);
    }
  }
  return t;
}

// K = sum_n |Kravchuk_{-n}><j;n|, entry (m, n) = Kravchuk_{-n}(m).
inline LinearOperator kravchuk_transform(GridDim dim) {
  return LinearOperator::from_fn(dim, [&](int m, int n) { return kravchuk_function(dim, -n, m); });
}

// U = sum_n e^{i phases[n]} |Kravchuk_{-n}><j;n|; phases are listed for
// n = -j..j.
inline LinearOperator generalized_kravchuk_transform(GridDim dim, std::span<const double> phases) {
  if (static_cast<Eigen::Index>(phases.size()) != dim.size()) {
    throw InvalidArgument("expected " + std::to_string(dim.d()) + " phases, got " +
                          std::to_string(phases.size()));
  }
  return LinearOperator::from_fn(dim, [&](int m, int n) {
    return std::exp(kI * phases[static_cast<std::size_t>(dim.slot(n))]) *
           kravchuk_function(dim, -n, m);
  });
}

struct Su2Generators {
  GridDim dim;
  LinearOperator jz;
  LinearOperator jplus;
  LinearOperator jminus;
  LinearOperator jx;
  LinearOperator jy;
};

// J_+|m> = sqrt((j-m)(j+m+1)) |m+1>, J_- = J_+^+, J_x = (J_+ + J_-)/2,
// J_y = (J_+ - J_-)/(2i).
inline Su2Generators su2_generators(GridDim dim) {
  const int j = dim.j();
  const LinearOperator jz = LinearOperator::diagonal(dim, [](int m) { return double(m); });
  const LinearOperator jp = LinearOperator::from_fn(dim, [&](int r, int c) {
    return r == c + 1 ? std::sqrt(double(j - c) * double(j + c + 1)) : 0.0;
  });
  const LinearOperator jm = jp.adjoint();
  return Su2Generators{dim, jz, jp, jm, Complex(0.5) * (jp + jm),
                       Complex(0.0, -0.5) * (jp - jm)};
}

}  // namespace finosc
