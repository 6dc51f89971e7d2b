#pragma once

// Hermitian eigensolver (cyclic complex Jacobi) and spectral calculus.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "finosc/grid.hpp"
#include "finosc/tolerances.hpp"

namespace finosc {

// Index range [first, last] of eigenvalues that are closer than the
// degeneracy gap to their neighbours.
struct EigenCluster {
  std::size_t first;
  std::size_t last;
};

struct SpectralDecomposition {
  GridDim dim;
  std::vector<double> eigenvalues;          // non-decreasing
  std::vector<GridFunction> eigenvectors;   // orthonormal, phase-fixed
  std::vector<EigenCluster> degenerate_clusters;
  int sweeps = 0;

  std::size_t size() const noexcept { return eigenvalues.size(); }
  bool has_degeneracy() const noexcept { return !degenerate_clusters.empty(); }

  // Columns are the eigenvectors.
  Matrix eigenvector_matrix() const {
    Matrix v(dim.size(), dim.size());
    for (std::size_t k = 0; k < eigenvectors.size(); ++k) {
      v.col(static_cast<Eigen::Index>(k)) = eigenvectors[k].values();
    }
    return v;
  }

  // sum_k f(lambda_k) |v_k><v_k|
  template <class Fn>
  LinearOperator apply(Fn&& f) const {
    const Matrix v = eigenvector_matrix();
    Vector w(dim.size());
    for (std::size_t k = 0; k < eigenvalues.size(); ++k) {
      w[static_cast<Eigen::Index>(k)] = Complex(f(eigenvalues[k]));
    }
    return LinearOperator(dim, v * w.asDiagonal() * v.adjoint());
  }

  LinearOperator reconstruct() const {
    return apply([](double lambda) { return lambda; });
  }
};

// Multiplies psi by the unit phase making its largest-magnitude entry real
// and positive. Entries within `tie` (relative) of the maximum are tied and
// the lowest grid index wins.
inline GridFunction fix_phase(const GridFunction& psi, double tie = 1e-12) {
  const Vector& v = psi.values();
  const double peak = v.cwiseAbs().maxCoeff();
  if (peak == 0.0) return psi;
  Eigen::Index pick = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) >= peak * (1.0 - tie)) {
      pick = i;
      break;
    }
  }
  const Complex phase = std::conj(v[pick]) / std::abs(v[pick]);
  return psi * phase;
}

namespace detail {

// One Jacobi rotation J chosen so that (J^+ A J)_{pq} = 0. With
// a_pq = g e^{i phi}: J_pp = J_qq = c, J_pq = s e^{i phi}, J_qp = -s e^{-i phi}.
inline void jacobi_rotate(Matrix& a, Matrix& v, Eigen::Index p, Eigen::Index q) {
  const Complex apq = a(p, q);
  const double g = std::abs(apq);
  if (g == 0.0) return;
  const Complex ph = apq / g;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * g);
  double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  if (theta < 0.0) t = -t;
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const Complex jpq = s * ph;
  const Complex jqp = -s * std::conj(ph);

  // A <- A J, V <- V J
  for (Matrix* m : {&a, &v}) {
    const Vector colp = m->col(p);
    const Vector colq = m->col(q);
    m->col(p) = c * colp + jqp * colq;
    m->col(q) = jpq * colp + c * colq;
  }
  // A <- J^+ A
  const Eigen::RowVectorXcd rowp = a.row(p);
  const Eigen::RowVectorXcd rowq = a.row(q);
  a.row(p) = c * rowp + std::conj(jqp) * rowq;
  a.row(q) = std::conj(jpq) * rowp + c * rowq;

  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * g;
  a(q, q) = aqq + t * g;
}

inline double off_diagonal_mass(const Matrix& a) {
  double acc = 0.0;
  for (Eigen::Index c = 0; c < a.cols(); ++c) {
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r != c) acc += std::norm(a(r, c));
    }
  }
  return std::sqrt(acc);
}

// Modified Gram-Schmidt over a contiguous set of columns, in column order.
inline void orthonormalize_columns(Matrix& v, std::size_t first, std::size_t last) {
  for (std::size_t k = first; k <= last; ++k) {
    const auto ck = static_cast<Eigen::Index>(k);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = first; i < k; ++i) {
        const auto ci = static_cast<Eigen::Index>(i);
        const Complex proj = v.col(ci).dot(v.col(ck));
        v.col(ck) -= proj * v.col(ci);
      }
    }
    v.col(ck).normalize();
  }
}

}  // namespace detail

// Spectral decomposition of a Hermitian operator by cyclic Jacobi sweeps.
// Throws NotHermitian when max|M - M^+| exceeds tol.hermitian and
// ConvergenceFailure after tol.max_sweeps sweeps.
inline SpectralDecomposition eigendecompose_hermitian(const LinearOperator& m,
                                                      const Tolerances& tol = default_tolerances()) {
  const double defect = m.hermiticity_defect();
  if (defect > tol.hermitian) {
    throw NotHermitian("operator is not Hermitian: max |M - M^+| = " + std::to_string(defect));
  }
  const GridDim dim = m.dim();
  const Eigen::Index d = dim.size();
  Matrix a = m.hermitian_part().matrix();
  a.diagonal() = a.diagonal().real().cast<Complex>();
  Matrix v = Matrix::Identity(d, d);

  const double scale = a.norm();
  int sweep = 0;
  for (;; ++sweep) {
    if (detail::off_diagonal_mass(a) <= tol.eigen_convergence * scale) break;
    if (sweep >= tol.max_sweeps) {
      throw ConvergenceFailure("Jacobi eigensolver did not converge in " +
                               std::to_string(tol.max_sweeps) + " sweeps");
    }
    for (Eigen::Index p = 0; p < d - 1; ++p) {
      for (Eigen::Index q = p + 1; q < d; ++q) {
        const double g = std::abs(a(p, q));
        // Late sweeps: drop elements that can no longer move the diagonal.
        if (sweep > 3 && g != 0.0) {
          const double app = std::abs(a(p, p).real());
          const double aqq = std::abs(a(q, q).real());
          if (app + 100.0 * g == app && aqq + 100.0 * g == aqq) {
            a(p, q) = 0.0;
            a(q, p) = 0.0;
            continue;
          }
        }
        detail::jacobi_rotate(a, v, p, q);
      }
    }
  }

  std::vector<std::size_t> order(static_cast<std::size_t>(d));
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(x)).real() <
           a(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(y)).real();
  });

  SpectralDecomposition out{dim, {}, {}, {}, sweep};
  Matrix sorted(d, d);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto src = static_cast<Eigen::Index>(order[k]);
    out.eigenvalues.push_back(a(src, src).real());
    sorted.col(static_cast<Eigen::Index>(k)) = v.col(src);
  }

  for (std::size_t k = 0; k < out.eigenvalues.size();) {
    std::size_t last = k;
    while (last + 1 < out.eigenvalues.size() &&
           out.eigenvalues[last + 1] - out.eigenvalues[last] < tol.degeneracy_gap) {
      ++last;
    }
    if (last > k) {
      detail::orthonormalize_columns(sorted, k, last);
      out.degenerate_clusters.push_back({k, last});
    }
    k = last + 1;
  }

  out.eigenvectors.reserve(static_cast<std::size_t>(d));
  for (Eigen::Index k = 0; k < d; ++k) {
    out.eigenvectors.push_back(fix_phase(GridFunction(dim, sorted.col(k)), tol.phase_tie));
  }
  return out;
}

// sum_k e^{scale * lambda_k} |v_k><v_k| for Hermitian M.
inline LinearOperator operator_exponential(const LinearOperator& m, Complex scale,
                                           const Tolerances& tol = default_tolerances()) {
  return eigendecompose_hermitian(m, tol).apply(
      [scale](double lambda) { return std::exp(scale * lambda); });
}

}  // namespace finosc
