#pragma once

// Finite oscillator Hamiltonians, Harper functions, the fractional Fourier
// transform, weighted Gram-Schmidt oscillators and revival detection.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "finosc/fourier.hpp"
#include "finosc/frames.hpp"
#include "finosc/gaussians.hpp"
#include "finosc/grid.hpp"
#include "finosc/kravchuk.hpp"
#include "finosc/spectral.hpp"
#include "finosc/tolerances.hpp"

namespace finosc {

struct OscillatorKind {
  enum class Tag { Fourier, Harper, Kravchuk, FrameQuantized, GramSchmidt, DeformedFourier, DeformedHarper };

  Tag tag = Tag::Fourier;
  int index = 0;       // Gaussian index 1..5 for FrameQuantized / GramSchmidt
  double alpha = 1.0;  // deformation parameter

  static OscillatorKind fourier() { return {Tag::Fourier}; }
  static OscillatorKind harper() { return {Tag::Harper}; }
  static OscillatorKind kravchuk() { return {Tag::Kravchuk}; }
  static OscillatorKind frame_quantized(int i) { return {Tag::FrameQuantized, i}; }
  static OscillatorKind gram_schmidt(int i) { return {Tag::GramSchmidt, i}; }
  static OscillatorKind deformed_fourier(double a) { return {Tag::DeformedFourier, 0, a}; }
  static OscillatorKind deformed_harper(double a) { return {Tag::DeformedHarper, 0, a}; }
};

inline std::string to_string(const OscillatorKind& k) {
  using T = OscillatorKind::Tag;
  switch (k.tag) {
    case T::Fourier: return "fourier";
    case T::Harper: return "harper";
    case T::Kravchuk: return "kravchuk";
    case T::FrameQuantized: return "frame" + std::to_string(k.index);
    case T::GramSchmidt: return "gramschmidt" + std::to_string(k.index);
    case T::DeformedFourier: return "deformed-fourier(" + std::to_string(k.alpha) + ")";
    case T::DeformedHarper: return "deformed-harper(" + std::to_string(k.alpha) + ")";
  }
  return "unknown";
}

// Periodic second difference: (P^2 psi)(n) = -[psi(n+1) - 2 psi(n) + psi(n-1)].
inline LinearOperator momentum_squared_difference(GridDim dim) {
  return LinearOperator::from_fn(dim, [&](int r, int c) {
    if (r == c) return 2.0;
    double v = 0.0;
    if (dim.wrap(r + 1LL) == c) v -= 1.0;
    if (dim.wrap(r - 1LL) == c) v -= 1.0;
    return v;
  });
}

// ---------------------------------------------------------------------------
// Sign alternations

struct SignAlternations {
  int count = 0;
  bool ambiguous = false;
};

namespace detail {

inline int count_flips(const Vector& v, double threshold) {
  int flips = 0;
  int last = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double x = v[i].real();
    if (std::abs(x) < threshold) continue;
    const int s = x > 0 ? 1 : -1;
    if (last != 0 && s != last) ++flips;
    last = s;
  }
  return flips;
}

}  // namespace detail

// Strict sign flips of Re h scanning n = -j..j, skipping entries below
// zero_rel * max|h|. The count is ambiguous when moving the threshold by a
// factor of ten either way changes it.
inline SignAlternations sign_alternations(const GridFunction& h, double zero_rel = 1e-9) {
  const Vector& v = h.values();
  const double thr = zero_rel * v.cwiseAbs().maxCoeff();
  SignAlternations out;
  out.count = detail::count_flips(v, thr);
  out.ambiguous = detail::count_flips(v, thr * 10.0) != out.count ||
                  detail::count_flips(v, thr * 0.1) != out.count;
  return out;
}

// ---------------------------------------------------------------------------
// Harper functions

struct HarperBasis {
  GridDim dim;
  std::vector<GridFunction> functions;       // h_0 .. h_{2j}
  std::vector<Complex> fourier_eigenvalues;  // (-i)^n
  std::vector<double> energies;              // H_Harper eigenvalue of h_n
  std::vector<int> alternations;             // sign-alternation count of h_n
  // True when sorting by energy gives the same order as sorting by
  // alternations. Informational only.
  bool ordering_consistent = false;
  double max_fourier_residual = 0.0;
};

inline LinearOperator harper_hamiltonian(GridDim dim) {
  const LinearOperator p2 = momentum_squared_difference(dim);
  const LinearOperator f = fourier_operator(dim);
  return Complex(0.5) * (p2 + f * p2 * f.adjoint());
}

inline Complex minus_i_power(int n) {
  static constexpr Complex table[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  return table[((n % 4) + 4) % 4];
}

// Eigenvectors of H_Harper ordered by their number of sign alternations and
// tagged with their Fourier eigenvalue (-i)^n.
inline HarperBasis harper_basis(GridDim dim, const Tolerances& tol = default_tolerances()) {
  const SpectralDecomposition spec = eigendecompose_hermitian(harper_hamiltonian(dim), tol);
  if (spec.has_degeneracy()) {
    const EigenCluster c = spec.degenerate_clusters.front();
    throw DegeneracyDetected("Harper spectrum has a degenerate cluster at eigenvalue " +
                             std::to_string(spec.eigenvalues[c.first]));
  }
  const std::size_t d = spec.size();
  std::vector<int> counts(d);
  for (std::size_t k = 0; k < d; ++k) {
    const SignAlternations s = sign_alternations(spec.eigenvectors[k], tol.sign_zero);
    if (s.ambiguous) {
      throw AmbiguousSignPattern("sign-alternation count of eigenvector " + std::to_string(k) +
                                 " depends on the zero threshold");
    }
    counts[k] = s.count;
  }
  std::vector<int> sorted = counts;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < d; ++k) {
    if (sorted[k] != static_cast<int>(k)) {
      throw AmbiguousSignPattern("sign-alternation counts are not a permutation of 0.." +
                                 std::to_string(d - 1));
    }
  }

  HarperBasis out{dim, {}, {}, {}, {}, true, 0.0};
  std::vector<std::size_t> by_count(d);
  for (std::size_t k = 0; k < d; ++k) by_count[static_cast<std::size_t>(counts[k])] = k;
  const LinearOperator f = fourier_operator(dim);
  for (std::size_t n = 0; n < d; ++n) {
    const std::size_t k = by_count[n];
    const GridFunction& h = spec.eigenvectors[k];
    const Complex lambda = minus_i_power(static_cast<int>(n));
    const double residual = max_abs_diff(f * h, lambda * h);
    out.max_fourier_residual = std::max(out.max_fourier_residual, residual);
    if (residual > 1e-8) {
      throw Error("Harper function h_" + std::to_string(n) + " fails F h = (-i)^n h by " +
                  std::to_string(residual));
    }
    if (k != n) out.ordering_consistent = false;
    out.functions.push_back(h);
    out.fourier_eigenvalues.push_back(lambda);
    out.energies.push_back(spec.eigenvalues[k]);
    out.alternations.push_back(static_cast<int>(n));
  }
  return out;
}

// F^alpha = sum_n e^{-i pi n alpha / 2} |h_n><h_n|
inline LinearOperator fractional_fourier(const HarperBasis& basis, double alpha) {
  const GridDim dim = basis.dim;
  Matrix m = Matrix::Zero(dim.size(), dim.size());
  for (std::size_t n = 0; n < basis.functions.size(); ++n) {
    const Vector& h = basis.functions[n].values();
    m += std::exp(Complex(0.0, -kPi * static_cast<double>(n) * alpha / 2.0)) * h * h.adjoint();
  }
  return LinearOperator(dim, std::move(m));
}

inline LinearOperator fractional_fourier(GridDim dim, double alpha,
                                         const Tolerances& tol = default_tolerances()) {
  return fractional_fourier(harper_basis(dim, tol), alpha);
}

// ---------------------------------------------------------------------------
// Weighted Gram-Schmidt

struct WeightedBasis {
  GridDim dim;
  std::vector<GridFunction> functions;  // phi_{-j} .. phi_j
  double max_cancellation = 1.0;
};

// Orthonormal phi_m = r * Phi_m, where Phi_m has degree j + m, positive
// leading coefficient, and the Phi_m are orthonormal for the weight r^2.
// The sequence is built from x * phi_{m-1} so it spans the same flag as the
// monomials without forming their ill-conditioned moment matrix.
inline WeightedBasis weighted_orthonormal_functions(const GridFunction& root_weight,
                                                    const Tolerances& tol = default_tolerances()) {
  const GridDim dim = root_weight.dim();
  const double r_norm = root_weight.norm();
  if (r_norm == 0.0) throw DegenerateWeight("weight vanishes identically");
  WeightedBasis out{dim, {}, 1.0};
  Matrix q(dim.size(), dim.size());
  q.col(0) = root_weight.values() / r_norm;
  const Vector x = position_operator(dim).matrix().diagonal();
  for (Eigen::Index k = 1; k < dim.size(); ++k) {
    const Vector seed = x.cwiseProduct(q.col(k - 1));
    Vector v = seed;
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index i = 0; i < k; ++i) v -= q.col(i).dot(v) * q.col(i);
    }
    const double out_norm = v.norm();
    const double ratio = out_norm > 0.0 ? seed.norm() / out_norm : HUGE_VAL;
    out.max_cancellation = std::max(out.max_cancellation, ratio);
    if (ratio > tol.gram_schmidt_condition) {
      throw DegenerateWeight("Gram-Schmidt step " + std::to_string(k) +
                             " lost the new direction (cancellation ratio " + std::to_string(ratio) +
                             "); the weight has zeros on the grid");
    }
    q.col(k) = v / out_norm;
  }
  for (Eigen::Index k = 0; k < dim.size(); ++k) out.functions.emplace_back(dim, q.col(k));
  return out;
}

struct GramSchmidtOscillator {
  WeightedBasis basis;
  LinearOperator hamiltonian;  // sum_m (j + m + 1/2) |phi_m><phi_m|
};

inline GramSchmidtOscillator gram_schmidt_oscillator(GridDim dim, const GridFunction& ground,
                                                     const Tolerances& tol = default_tolerances()) {
  WeightedBasis basis = weighted_orthonormal_functions(ground, tol);
  Matrix h = Matrix::Zero(dim.size(), dim.size());
  for (std::size_t k = 0; k < basis.functions.size(); ++k) {
    const Vector& phi = basis.functions[k].values();
    h += (static_cast<double>(k) + 0.5) * phi * phi.adjoint();
  }
  return {std::move(basis), LinearOperator(dim, std::move(h))};
}

// Oscillator with ground state G_i (weight G_i^2).
inline GramSchmidtOscillator gram_schmidt_oscillator(GridDim dim, int i,
                                                     const Tolerances& tol = default_tolerances()) {
  return gram_schmidt_oscillator(dim, standard_gaussian(dim, i), tol);
}

// ---------------------------------------------------------------------------
// Hamiltonians

namespace detail {

inline void require_deformation(double alpha) {
  if (!(alpha > 0.0 && alpha < 2.0)) {
    throw InvalidArgument("deformation alpha must lie in (0, 2), got " + std::to_string(alpha));
  }
}

inline void require_gaussian_index(int i) {
  if (i < 1 || i > 5) throw InvalidArgument("Gaussian index must be in 1..5, got " + std::to_string(i));
}

}  // namespace detail

inline LinearOperator frame_quantized_hamiltonian(GridDim dim, int i) {
  detail::require_gaussian_index(i);
  const CoherentFamily family = coherent_family(dim, i);
  const LinearOperator af = quantize(family, [](int a, int b) {
    return Complex(0.5 * (double(a) * a + double(b) * b));
  });
  return af.shifted(-0.5).hermitian_part();
}

inline LinearOperator hamiltonian(GridDim dim, const OscillatorKind& kind,
                                  const Tolerances& tol = default_tolerances()) {
  using T = OscillatorKind::Tag;
  const int j = dim.j();
  switch (kind.tag) {
    case T::Fourier: {
      const LinearOperator f = fourier_operator(dim);
      const LinearOperator q2 = LinearOperator::diagonal(dim, [](int n) { return double(n) * n; });
      return Complex(0.5) * (f.adjoint() * q2 * f + q2);
    }
    case T::Harper:
      return harper_hamiltonian(dim);
    case T::Kravchuk:
      return LinearOperator::diagonal(dim, [j](int n) { return n + j + 0.5; });
    case T::FrameQuantized:
      return frame_quantized_hamiltonian(dim, kind.index);
    case T::GramSchmidt:
      detail::require_gaussian_index(kind.index);
      return gram_schmidt_oscillator(dim, kind.index, tol).hamiltonian.hermitian_part();
    case T::DeformedFourier: {
      detail::require_deformation(kind.alpha);
      const HarperBasis hb = harper_basis(dim, tol);
      const LinearOperator fa = fractional_fourier(hb, kind.alpha);
      const LinearOperator q2 = LinearOperator::diagonal(dim, [](int n) { return double(n) * n; });
      return (Complex(0.5) * (fa.adjoint() * q2 * fa + q2)).hermitian_part();
    }
    case T::DeformedHarper: {
      detail::require_deformation(kind.alpha);
      const HarperBasis hb = harper_basis(dim, tol);
      const LinearOperator fa = fractional_fourier(hb, kind.alpha);
      const LinearOperator p2 = momentum_squared_difference(dim);
      return (Complex(0.5) * (p2 + fa * p2 * fa.adjoint())).hermitian_part();
    }
  }
  throw InvalidArgument("unknown oscillator kind");
}

// ---------------------------------------------------------------------------
// Time evolution and revivals

// e^{-itH} psi
inline GridFunction evolve(const SpectralDecomposition& spec, const GridFunction& psi, double t) {
  require_same_dim(spec.dim, psi.dim());
  Vector out = Vector::Zero(psi.dim().size());
  for (std::size_t k = 0; k < spec.size(); ++k) {
    const Vector& v = spec.eigenvectors[k].values();
    out += std::exp(Complex(0.0, -t * spec.eigenvalues[k])) * v.dot(psi.values()) * v;
  }
  return GridFunction(psi.dim(), std::move(out));
}

inline GridFunction evolve(const LinearOperator& h, const GridFunction& psi, double t,
                           const Tolerances& tol = default_tolerances()) {
  return evolve(eigendecompose_hermitian(h, tol), psi, t);
}

struct Progression {
  std::size_t start = 0;   // index of the first eigenvalue
  std::size_t length = 0;  // number of eigenvalues
  double gap = 0.0;        // mean spacing
  double max_deviation = 0.0;
  double period = 0.0;     // 2 pi / gap
};

struct RevivalReport {
  std::vector<Progression> progressions;
  std::size_t spectrum_size = 0;

  bool full_spectrum() const {
    return progressions.size() == 1 && progressions.front().length == spectrum_size;
  }
};

// Maximal runs of at least min_len consecutive eigenvalues whose successive
// gaps agree within tol (max gap - min gap <= tol). Gaps not above tol are
// never part of a run. Adjacent runs may share their boundary eigenvalue.
inline RevivalReport detect_revivals(const std::vector<double>& eigenvalues, int min_len, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("revival tolerance must be positive");
  if (min_len < 3) throw InvalidArgument("progressions need min_len >= 3, got " + std::to_string(min_len));
  if (!std::is_sorted(eigenvalues.begin(), eigenvalues.end())) {
    throw InvalidArgument("revival detection needs a sorted spectrum");
  }
  RevivalReport report;
  report.spectrum_size = eigenvalues.size();
  if (eigenvalues.size() < 2) return report;
  std::vector<double> gaps(eigenvalues.size() - 1);
  for (std::size_t k = 0; k + 1 < eigenvalues.size(); ++k) gaps[k] = eigenvalues[k + 1] - eigenvalues[k];

  std::size_t i = 0;
  while (i < gaps.size()) {
    if (gaps[i] <= tol) {
      ++i;
      continue;
    }
    double lo = gaps[i], hi = gaps[i];
    std::size_t e = i + 1;
    while (e < gaps.size() && gaps[e] > tol && std::max(hi, gaps[e]) - std::min(lo, gaps[e]) <= tol) {
      lo = std::min(lo, gaps[e]);
      hi = std::max(hi, gaps[e]);
      ++e;
    }
    const std::size_t n_gaps = e - i;
    if (static_cast<int>(n_gaps + 1) >= min_len) {
      Progression p;
      p.start = i;
      p.length = n_gaps + 1;
      p.gap = std::accumulate(gaps.begin() + static_cast<std::ptrdiff_t>(i),
                              gaps.begin() + static_cast<std::ptrdiff_t>(e), 0.0) /
              static_cast<double>(n_gaps);
      for (std::size_t k = i; k < e; ++k) p.max_deviation = std::max(p.max_deviation, std::abs(gaps[k] - p.gap));
      p.period = 2.0 * kPi / p.gap;
      report.progressions.push_back(p);
    }
    i = e;
  }
  return report;
}

inline RevivalReport detect_revivals(const SpectralDecomposition& spec, int min_len, double tol) {
  return detect_revivals(spec.eigenvalues, min_len, tol);
}

// |<psi(0)|psi(t)>| for unit psi.
inline double fidelity(const SpectralDecomposition& spec, const GridFunction& psi, double t) {
  return std::abs(inner_product(psi, evolve(spec, psi, t)));
}

}  // namespace finosc
