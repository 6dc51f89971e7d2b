#pragma once

// The symmetric index grid {-j, ..., j}, complex functions on it, and dense
// operators acting on those functions.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <ranges>
#include <string>
#include <utility>

#include "finosc/errors.hpp"

namespace finosc {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr Complex kI{0.0, 1.0};

// Odd dimension d = 2j + 1 with j >= 1.
class GridDim {
 public:
  static GridDim from_dimension(int d) {
    if (d < 3) {
      throw InvalidArgument("dimension must be at least 3, got " + std::to_string(d));
    }
    if (d % 2 == 0) {
      throw InvalidArgument("dimension must be odd, got " + std::to_string(d));
    }
    return GridDim((d - 1) / 2);
  }

  static GridDim from_j(int j) {
    if (j < 1) {
      throw InvalidArgument("j must be a positive integer, got " + std::to_string(j));
    }
    return GridDim(j);
  }

  int j() const noexcept { return j_; }
  int d() const noexcept { return 2 * j_ + 1; }
  Eigen::Index size() const noexcept { return d(); }

  bool contains(long long n) const noexcept { return n >= -j_ && n <= j_; }

  // Representative of n mod d inside {-j, ..., j}.
  int wrap(long long n) const noexcept {
    const long long dd = d();
    long long r = (n + j_) % dd;
    if (r < 0) r += dd;
    return static_cast<int>(r) - j_;
  }

  // Storage position of grid index n (after wrapping).
  Eigen::Index slot(long long n) const noexcept { return wrap(n) + j_; }
  int index_at(Eigen::Index slot) const noexcept { return static_cast<int>(slot) - j_; }

  auto indices() const noexcept { return std::views::iota(-j_, j_ + 1); }

  friend bool operator==(GridDim, GridDim) = default;

 private:
  explicit GridDim(int j) : j_(j) {}
  int j_;
};

inline void require_same_dim(GridDim a, GridDim b) {
  if (a != b) throw DimensionMismatch(a.d(), b.d());
}

// A state vector psi : {-j..j} -> C. Reads outside the grid wrap mod d.
class GridFunction {
 public:
  explicit GridFunction(GridDim dim) : dim_(dim), values_(Vector::Zero(dim.size())) {}

  GridFunction(GridDim dim, Vector values) : dim_(dim), values_(std::move(values)) {
    if (values_.size() != dim_.size()) {
      throw DimensionMismatch(dim_.d(), static_cast<int>(values_.size()));
    }
  }

  // Builds psi(n) = f(n) for n = -j..j.
  template <class Fn>
  static GridFunction from_fn(GridDim dim, Fn&& f) {
    Vector v(dim.size());
    for (int n : dim.indices()) v[dim.slot(n)] = Complex(f(n));
    return GridFunction(dim, std::move(v));
  }

  static GridFunction delta(GridDim dim, long long k) {
    Vector v = Vector::Zero(dim.size());
    v[dim.slot(k)] = 1.0;
    return GridFunction(dim, std::move(v));
  }

  GridDim dim() const noexcept { return dim_; }
  const Vector& values() const noexcept { return values_; }

  Complex operator()(long long n) const { return values_[dim_.slot(n)]; }

  double norm() const { return values_.norm(); }
  double squared_norm() const { return values_.squaredNorm(); }

  GridFunction normalized() const {
    const double nrm = norm();
    if (nrm == 0.0) throw InvalidArgument("cannot normalize the zero vector");
    return GridFunction(dim_, values_ / nrm);
  }

  GridFunction conj() const { return GridFunction(dim_, values_.conjugate()); }

  // psi(-n)
  GridFunction reflected() const {
    return from_fn(dim_, [this](int n) { return (*this)(-n); });
  }

  GridFunction operator+(const GridFunction& o) const {
    require_same_dim(dim_, o.dim_);
    return GridFunction(dim_, values_ + o.values_);
  }
  GridFunction operator-(const GridFunction& o) const {
    require_same_dim(dim_, o.dim_);
    return GridFunction(dim_, values_ - o.values_);
  }
  GridFunction operator*(Complex s) const { return GridFunction(dim_, values_ * s); }
  friend GridFunction operator*(Complex s, const GridFunction& f) { return f * s; }
  GridFunction operator/(Complex s) const { return GridFunction(dim_, values_ / s); }

 private:
  GridDim dim_;
  Vector values_;
};

// Sum_n conj(phi(n)) psi(n).
inline Complex inner_product(const GridFunction& phi, const GridFunction& psi) {
  require_same_dim(phi.dim(), psi.dim());
  return phi.values().dot(psi.values());  // Eigen's dot conjugates the left operand
}

inline double max_abs_diff(const GridFunction& a, const GridFunction& b) {
  require_same_dim(a.dim(), b.dim());
  return (a.values() - b.values()).cwiseAbs().maxCoeff();
}

// Dense d x d operator in the canonical basis {delta_k}. Entry (m, n) is
// <delta_m | M | delta_n>.
class LinearOperator {
 public:
  LinearOperator(GridDim dim, Matrix entries) : dim_(dim), entries_(std::move(entries)) {
    if (entries_.rows() != dim_.size() || entries_.cols() != dim_.size()) {
      throw DimensionMismatch(dim_.d(), static_cast<int>(entries_.rows()));
    }
  }

  static LinearOperator identity(GridDim dim) {
    return LinearOperator(dim, Matrix::Identity(dim.size(), dim.size()));
  }
  static LinearOperator zero(GridDim dim) {
    return LinearOperator(dim, Matrix::Zero(dim.size(), dim.size()));
  }

  // diag(f(-j), ..., f(j))
  template <class Fn>
  static LinearOperator diagonal(GridDim dim, Fn&& f) {
    Matrix m = Matrix::Zero(dim.size(), dim.size());
    for (int n : dim.indices()) m(dim.slot(n), dim.slot(n)) = Complex(f(n));
    return LinearOperator(dim, std::move(m));
  }

  // Entry (m, n) = f(m, n) for m, n in -j..j.
  template <class Fn>
  static LinearOperator from_fn(GridDim dim, Fn&& f) {
    Matrix m(dim.size(), dim.size());
    for (int r : dim.indices()) {
      for (int c : dim.indices()) m(dim.slot(r), dim.slot(c)) = Complex(f(r, c));
    }
    return LinearOperator(dim, std::move(m));
  }

  // |a><b|
  static LinearOperator outer(const GridFunction& a, const GridFunction& b) {
    require_same_dim(a.dim(), b.dim());
    return LinearOperator(a.dim(), a.values() * b.values().adjoint());
  }

  GridDim dim() const noexcept { return dim_; }
  const Matrix& matrix() const noexcept { return entries_; }

  Complex operator()(long long m, long long n) const {
    return entries_(dim_.slot(m), dim_.slot(n));
  }

  LinearOperator adjoint() const { return LinearOperator(dim_, entries_.adjoint()); }

  // max |M - M^+|
  double hermiticity_defect() const {
    return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  }
  // (M + M^+) / 2
  LinearOperator hermitian_part() const {
    return LinearOperator(dim_, 0.5 * (entries_ + entries_.adjoint()));
  }

  double max_abs() const { return entries_.cwiseAbs().maxCoeff(); }
  double frobenius_norm() const { return entries_.norm(); }
  Complex trace() const { return entries_.trace(); }

  GridFunction operator*(const GridFunction& psi) const {
    require_same_dim(dim_, psi.dim());
    return GridFunction(dim_, entries_ * psi.values());
  }
  LinearOperator operator*(const LinearOperator& o) const {
    require_same_dim(dim_, o.dim_);
    return LinearOperator(dim_, entries_ * o.entries_);
  }
  LinearOperator operator+(const LinearOperator& o) const {
    require_same_dim(dim_, o.dim_);
    return LinearOperator(dim_, entries_ + o.entries_);
  }
  LinearOperator operator-(const LinearOperator& o) const {
    require_same_dim(dim_, o.dim_);
    return LinearOperator(dim_, entries_ - o.entries_);
  }
  LinearOperator operator*(Complex s) const { return LinearOperator(dim_, entries_ * s); }
  friend LinearOperator operator*(Complex s, const LinearOperator& m) { return m * s; }

  // M + s * I
  LinearOperator shifted(Complex s) const {
    Matrix m = entries_;
    m.diagonal().array() += s;
    return LinearOperator(dim_, std::move(m));
  }

 private:
  GridDim dim_;
  Matrix entries_;
};

inline double max_abs_diff(const LinearOperator& a, const LinearOperator& b) {
  require_same_dim(a.dim(), b.dim());
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

inline LinearOperator commutator(const LinearOperator& a, const LinearOperator& b) {
  return a * b - b * a;
}

}  // namespace finosc
