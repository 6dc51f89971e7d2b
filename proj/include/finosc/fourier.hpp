#pragma once

// Centered discrete Fourier transform, the position / momentum / parity
// operators and cyclic convolution.

#include <cmath>

#include "finosc/grid.hpp"

namespace finosc {

namespace detail {

// e^{sign * 2 pi i k n / d}, with k n reduced mod d before scaling so large
// index products do not lose phase accuracy.
inline Complex unit_root(GridDim dim, long long k, long long n, int sign) {
  const long long dd = dim.d();
  long long r = (k * n) % dd;
  if (r < 0) r += dd;
  const double angle = sign * 2.0 * kPi * static_cast<double>(r) / static_cast<double>(dd);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace detail

// F: entry (k, n) = e^{-2 pi i k n / d} / sqrt(d).
inline LinearOperator fourier_operator(GridDim dim) {
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim.d()));
  return LinearOperator::from_fn(
      dim, [&](int k, int n) { return scale * detail::unit_root(dim, k, n, -1); });
}

// F[psi](k) = (1/sqrt d) sum_n e^{-2 pi i k n / d} psi(n)
inline GridFunction fourier_transform(const GridFunction& psi) {
  const GridDim dim = psi.dim();
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim.d()));
  return GridFunction::from_fn(dim, [&](int k) {
    Complex acc = 0.0;
    for (int n : dim.indices()) acc += detail::unit_root(dim, k, n, -1) * psi(n);
    return scale * acc;
  });
}

// F^+[psi](k) = (1/sqrt d) sum_n e^{+2 pi i k n / d} psi(n)
inline GridFunction inverse_fourier_transform(const GridFunction& psi) {
  const GridDim dim = psi.dim();
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim.d()));
  return GridFunction::from_fn(dim, [&](int k) {
    Complex acc = 0.0;
    for (int n : dim.indices()) acc += detail::unit_root(dim, k, n, +1) * psi(n);
    return scale * acc;
  });
}

// (Q psi)(n) = n psi(n)
inline LinearOperator position_operator(GridDim dim) {
  return LinearOperator::diagonal(dim, [](int n) { return static_cast<double>(n); });
}

// P = F^+ Q F
inline LinearOperator momentum_operator(GridDim dim) {
  const LinearOperator f = fourier_operator(dim);
  return f.adjoint() * position_operator(dim) * f;
}

// (Pi psi)(n) = psi(-n); equals F^2.
inline LinearOperator parity_operator(GridDim dim) {
  return LinearOperator::from_fn(dim, [](int m, int n) { return m == -n ? 1.0 : 0.0; });
}

// (phi * psi)(n) = sum_m phi(m) psi(n - m), indices taken mod d.
inline GridFunction convolve(const GridFunction& phi, const GridFunction& psi) {
  require_same_dim(phi.dim(), psi.dim());
  const GridDim dim = phi.dim();
  return GridFunction::from_fn(dim, [&](int n) {
    Complex acc = 0.0;
    for (int m : dim.indices()) acc += phi(m) * psi(static_cast<long long>(n) - m);
    return acc;
  });
}

inline double parity_defect(const GridFunction& psi) {
  return max_abs_diff(psi, psi.reflected());
}

inline bool is_even(const GridFunction& psi, double tol = 1e-12) {
  return parity_defect(psi) <= tol;
}

}  // namespace finosc
