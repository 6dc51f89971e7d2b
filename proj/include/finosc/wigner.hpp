#pragma once

// Discrete Wigner function on the d x d phase-space grid.

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "finosc/fourier.hpp"
#include "finosc/gaussians.hpp"
#include "finosc/grid.hpp"
#include "finosc/tolerances.hpp"

namespace finosc {

// values(slot(n), slot(m)) = W(n, m): position n, momentum m.
struct WignerMap {
  GridDim dim;
  Eigen::MatrixXd values;
  double max_imag_residue = 0.0;

  double operator()(long long n, long long m) const { return values(dim.slot(n), dim.slot(m)); }

  double total() const { return values.sum(); }
};

inline double max_abs_diff(const WignerMap& a, const WignerMap& b) {
  require_same_dim(a.dim, b.dim);
  return (a.values - b.values).cwiseAbs().maxCoeff();
}

// W(n, m) = (1/d) sum_k e^{4 pi i m k / d} psi(n - k) conj(psi(n + k))
inline WignerMap wigner(const GridFunction& psi, const Tolerances& tol = default_tolerances()) {
  const GridDim dim = psi.dim();
  const double inv_d = 1.0 / dim.d();
  WignerMap out{dim, Eigen::MatrixXd(dim.size(), dim.size()), 0.0};
  for (int n : dim.indices()) {
    for (int m : dim.indices()) {
      Complex acc = 0.0;
      for (int k : dim.indices()) {
        acc += detail::unit_root(dim, 2LL * m, k, +1) * psi(static_cast<long long>(n) - k) *
               std::conj(psi(static_cast<long long>(n) + k));
      }
      acc *= inv_d;
      out.values(dim.slot(n), dim.slot(m)) = acc.real();
      out.max_imag_residue = std::max(out.max_imag_residue, std::abs(acc.imag()));
    }
  }
  const double scale = std::max(1.0, psi.squared_norm());
  if (out.max_imag_residue > tol.wigner_imaginary * scale) {
    throw Error("Wigner sum has imaginary residue " + std::to_string(out.max_imag_residue));
  }
  return out;
}

// Checks W_{F psi}(n, m) = W_psi(m, -n) for even psi.
inline bool wigner_fourier_covariance_check(const GridFunction& psi,
                                            const Tolerances& tol = default_tolerances()) {
  const double defect = parity_defect(psi);
  if (defect > tol.parity * std::max(1.0, psi.values().cwiseAbs().maxCoeff())) {
    throw InvalidArgument("covariance check needs an even function; parity defect " +
                          std::to_string(defect));
  }
  const GridDim dim = psi.dim();
  const WignerMap w = wigner(psi, tol);
  const WignerMap wf = wigner(fourier_transform(psi), tol);
  double worst = 0.0;
  for (int n : dim.indices()) {
    for (int m : dim.indices()) worst = std::max(worst, std::abs(wf(n, m) - w(m, -n)));
  }
  return worst <= 1e-10;
}

// Wigner map of g1, g2 or g3 (width kappa) assembled from products of
// g1, g2 at widths 2 kappa (position) and 2 / kappa (momentum).
inline WignerMap wigner_product_decomposition(GaussianKind kind, double kappa, GridDim dim) {
  if (!has_kappa(kind)) {
    throw InvalidArgument("product decomposition exists only for g1, g2, g3");
  }
  if (!(kappa > 0.0)) throw InvalidArgument("kappa must be positive, got " + std::to_string(kappa));
  const GridFunction p1 = gaussian(dim, GaussianFamily::g1(2.0 * kappa));
  const GridFunction p2 = gaussian(dim, GaussianFamily::g2(2.0 * kappa));
  const GridFunction q1 = gaussian(dim, GaussianFamily::g1(2.0 / kappa));
  const GridFunction q2 = gaussian(dim, GaussianFamily::g2(2.0 / kappa));

  // Signs of p1 q1, p1 q2, p2 q1, p2 q2.
  std::array<double, 4> s{};
  switch (kind) {
    case GaussianKind::G1: s = {1, 1, 1, -1}; break;
    case GaussianKind::G2: s = {1, -1, 1, 1}; break;
    default: s = {1, 1, -1, 1}; break;
  }
  const double c = 1.0 / std::sqrt(2.0 * kappa * dim.d());
  WignerMap out{dim, Eigen::MatrixXd(dim.size(), dim.size()), 0.0};
  for (int n : dim.indices()) {
    for (int m : dim.indices()) {
      const double a1 = p1(n).real(), a2 = p2(n).real();
      const double b1 = q1(m).real(), b2 = q2(m).real();
      out.values(dim.slot(n), dim.slot(m)) =
          c * (s[0] * a1 * b1 + s[1] * a1 * b2 + s[2] * a2 * b1 + s[3] * a2 * b2);
    }
  }
  return out;
}

}  // namespace finosc
