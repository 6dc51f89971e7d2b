#pragma once

// Schwinger shift/clock operators, displacements D(alpha, beta), displaced
// Gaussian coherent states, and the frame quantization maps built on them.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "finosc/fourier.hpp"
#include "finosc/gaussians.hpp"
#include "finosc/grid.hpp"
#include "finosc/spectral.hpp"
#include "finosc/tolerances.hpp"

namespace finosc {

enum class SchwingerKind { A, B };

// A^p: (A^p psi)(n) = psi(n - p).  B^p: (B^p psi)(n) = e^{2 pi i n p / d} psi(n).
inline LinearOperator schwinger(GridDim dim, SchwingerKind which, long long power) {
  if (which == SchwingerKind::A) {
    return LinearOperator::from_fn(
        dim, [&](int r, int c) { return dim.wrap(static_cast<long long>(r) - power) == c ? 1.0 : 0.0; });
  }
  return LinearOperator::diagonal(dim, [&](int n) { return detail::unit_root(dim, n, power, +1); });
}

// A phase-space point with both coordinates reduced into {-j..j}.
struct DisplacementLabel {
  int alpha;
  int beta;

  static DisplacementLabel reduced(GridDim dim, long long alpha, long long beta) {
    return {dim.wrap(alpha), dim.wrap(beta)};
  }
  friend bool operator==(const DisplacementLabel&, const DisplacementLabel&) = default;
};

// D(alpha, beta) = e^{pi i alpha beta / d} A^alpha B^beta for the integers as
// given. Shifting alpha by d flips the sign when beta is odd, so callers
// composing displacements should pass unreduced sums.
inline LinearOperator displacement(GridDim dim, long long alpha, long long beta) {
  const long long dd = dim.d();
  long long r = (alpha * beta) % (2 * dd);
  if (r < 0) r += 2 * dd;
  const double angle = kPi * static_cast<double>(r) / static_cast<double>(dd);
  // (D psi)(n) = e^{pi i alpha beta/d} e^{2 pi i (n - alpha) beta / d} psi(n - alpha)
  return LinearOperator::from_fn(dim, [&](int row, int col) -> Complex {
    if (dim.wrap(static_cast<long long>(row) - alpha) != col) return 0.0;
    return Complex(std::cos(angle), std::sin(angle)) *
           detail::unit_root(dim, static_cast<long long>(row) - alpha, beta, +1);
  });
}

inline LinearOperator displacement(GridDim dim, DisplacementLabel label) {
  return displacement(dim, label.alpha, label.beta);
}

// Complex function on the label grid, stored at (slot(alpha), slot(beta)).
struct PhaseSpaceTable {
  GridDim dim;
  Matrix values;

  Complex operator()(long long alpha, long long beta) const {
    return values(dim.slot(alpha), dim.slot(beta));
  }
};

using PhaseSpaceFunction = std::function<Complex(int alpha, int beta)>;

// The d^2 states D(alpha, beta) u for a unit fiducial u.
class CoherentFamily {
 public:
  CoherentFamily(GridFunction fiducial, const Tolerances& tol = default_tolerances())
      : dim_(fiducial.dim()), fiducial_(std::move(fiducial)), states_(dim_.size(), dim_.size() * dim_.size()) {
    if (std::abs(fiducial_.norm() - 1.0) > tol.unit_norm) {
      throw InvalidArgument("coherent-state fiducial must have unit norm, got " +
                            std::to_string(fiducial_.norm()));
    }
    for (int a : dim_.indices()) {
      for (int b : dim_.indices()) {
        states_.col(column(a, b)) = (displacement(dim_, a, b) * fiducial_).values();
      }
    }
  }

  GridDim dim() const noexcept { return dim_; }
  const GridFunction& fiducial() const noexcept { return fiducial_; }

  // |alpha, beta>, labels reduced into {-j..j}.
  GridFunction state(long long alpha, long long beta) const {
    return GridFunction(dim_, states_.col(column(alpha, beta)));
  }

  // d x d^2 matrix whose columns are the states.
  const Matrix& state_matrix() const noexcept { return states_; }

  Eigen::Index column(long long alpha, long long beta) const {
    return dim_.slot(alpha) * dim_.size() + dim_.slot(beta);
  }

  // (1/d) sum |alpha,beta><alpha,beta|
  LinearOperator resolution() const {
    return LinearOperator(dim_, states_ * states_.adjoint() / static_cast<double>(dim_.d()));
  }

 private:
  GridDim dim_;
  GridFunction fiducial_;
  Matrix states_;
};

inline CoherentFamily coherent_family(GridDim dim, const GaussianFamily& fiducial) {
  return CoherentFamily(normalized_gaussian(dim, fiducial));
}

// Coherent family on the standard Gaussian G_i.
inline CoherentFamily coherent_family(GridDim dim, int i) {
  return coherent_family(dim, GaussianFamily::standard(i));
}

// A_f = (1/d) sum f(alpha, beta) |alpha,beta><alpha,beta|
inline LinearOperator quantize(const CoherentFamily& family, const PhaseSpaceFunction& f) {
  const GridDim dim = family.dim();
  Vector weights(dim.size() * dim.size());
  for (int a : dim.indices()) {
    for (int b : dim.indices()) weights[family.column(a, b)] = f(a, b);
  }
  const Matrix& s = family.state_matrix();
  return LinearOperator(dim, s * weights.asDiagonal() * s.adjoint() / static_cast<double>(dim.d()));
}

// f_M(alpha, beta) = <alpha,beta| M |alpha,beta>
inline PhaseSpaceTable dequantize(const CoherentFamily& family, const LinearOperator& m) {
  require_same_dim(family.dim(), m.dim());
  const GridDim dim = family.dim();
  const Matrix& s = family.state_matrix();
  const Matrix ms = m.matrix() * s;
  PhaseSpaceTable out{dim, Matrix(dim.size(), dim.size())};
  for (int a : dim.indices()) {
    for (int b : dim.indices()) {
      const Eigen::Index c = family.column(a, b);
      out.values(dim.slot(a), dim.slot(b)) = s.col(c).dot(ms.col(c));
    }
  }
  return out;
}

// Unit vectors u_i with weights kappa_i and sum kappa_i |u_i><u_i| = I.
struct FiniteFrame {
  GridDim dim;
  std::vector<GridFunction> vectors;
  std::vector<double> weights;

  LinearOperator frame_operator() const {
    LinearOperator s = LinearOperator::zero(dim);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      s = s + Complex(weights[i]) * LinearOperator::outer(vectors[i], vectors[i]);
    }
    return s;
  }

  double weight_sum() const {
    double acc = 0.0;
    for (double w : weights) acc += w;
    return acc;
  }
};

struct FrameAnalysis {
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  bool is_frame = false;
  bool is_tight = false;
  // Present for tight frames: u_i = w_i / |w_i|, kappa_i = <w_i|w_i> / bound.
  std::optional<FiniteFrame> frame;
};

// Frame bounds are the extreme eigenvalues of S = sum |w_i><w_i|. Tightness
// compares their spread against tol.frame_tightness * max(1, upper bound).
inline FrameAnalysis frame_analyze(std::span<const GridFunction> vectors,
                                   const Tolerances& tol = default_tolerances()) {
  if (vectors.empty()) throw InvalidArgument("frame analysis needs at least one vector");
  const GridDim dim = vectors.front().dim();
  Matrix s = Matrix::Zero(dim.size(), dim.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    require_same_dim(dim, vectors[i].dim());
    if (vectors[i].norm() == 0.0) {
      throw InvalidArgument("frame vector " + std::to_string(i) + " is zero");
    }
    s += vectors[i].values() * vectors[i].values().adjoint();
  }
  const SpectralDecomposition spec = eigendecompose_hermitian(LinearOperator(dim, s), tol);
  FrameAnalysis out;
  out.lower_bound = spec.eigenvalues.front();
  out.upper_bound = spec.eigenvalues.back();
  const double scale = std::max(1.0, out.upper_bound);
  out.is_frame = out.lower_bound > tol.frame_tightness * scale;
  out.is_tight = out.is_frame && (out.upper_bound - out.lower_bound) <= tol.frame_tightness * scale;
  if (out.is_tight) {
    const double bound = 0.5 * (out.lower_bound + out.upper_bound);
    FiniteFrame frame{dim, {}, {}};
    for (const GridFunction& w : vectors) {
      frame.vectors.push_back(w.normalized());
      frame.weights.push_back(w.squared_norm() / bound);
    }
    out.frame = std::move(frame);
  }
  return out;
}

}  // namespace finosc
