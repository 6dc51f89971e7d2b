#pragma once

// The five finite Gaussians g1..g5 on {-j..j}, their unit-norm versions
// G1..G5, and closed forms for their squared norms.

#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <tuple>

#include "finosc/combinatorics.hpp"
#include "finosc/grid.hpp"
#include "finosc/theta.hpp"
#include "finosc/tolerances.hpp"

namespace finosc {

enum class GaussianKind { G1 = 1, G2 = 2, G3 = 3, G4 = 4, G5 = 5 };

inline std::string to_string(GaussianKind k) { return "g" + std::to_string(static_cast<int>(k)); }

inline bool has_kappa(GaussianKind k) noexcept {
  return k == GaussianKind::G1 || k == GaussianKind::G2 || k == GaussianKind::G3;
}

// g1..g3 carry a width parameter kappa > 0; g4, g5 carry none.
class GaussianFamily {
 public:
  static GaussianFamily make(GaussianKind kind, double kappa = 1.0) {
    if (!has_kappa(kind)) return GaussianFamily(kind, std::nullopt);
    if (!(kappa > 0.0) || !std::isfinite(kappa)) {
      throw InvalidArgument("kappa must be positive, got " + std::to_string(kappa));
    }
    return GaussianFamily(kind, kappa);
  }
  static GaussianFamily g1(double kappa = 1.0) { return make(GaussianKind::G1, kappa); }
  static GaussianFamily g2(double kappa = 1.0) { return make(GaussianKind::G2, kappa); }
  static GaussianFamily g3(double kappa = 1.0) { return make(GaussianKind::G3, kappa); }
  static GaussianFamily g4() { return make(GaussianKind::G4); }
  static GaussianFamily g5() { return make(GaussianKind::G5); }

  // The family with index i in 1..5 and kappa = 1 (the G_i fiducials).
  static GaussianFamily standard(int i) {
    if (i < 1 || i > 5) throw InvalidArgument("Gaussian index must be in 1..5, got " + std::to_string(i));
    return make(static_cast<GaussianKind>(i));
  }

  GaussianKind kind() const noexcept { return kind_; }
  std::optional<double> kappa() const noexcept { return kappa_; }
  double kappa_or_one() const noexcept { return kappa_.value_or(1.0); }

  friend bool operator==(const GaussianFamily&, const GaussianFamily&) = default;

 private:
  GaussianFamily(GaussianKind k, std::optional<double> kappa) : kind_(k), kappa_(kappa) {}
  GaussianKind kind_;
  std::optional<double> kappa_;
};

namespace detail {

inline double lattice_gaussian(GridDim dim, double kappa, int n, double offset, bool alternate,
                               const Tolerances& tol) {
  const double d = dim.d();
  auto term = [&](long long a) {
    const double x = (static_cast<double>(a) + offset) * d + n;
    const double v = std::exp(-kappa * kPi * x * x / d);
    return Complex(alternate && (a & 1) ? -v : v);
  };
  return symmetric_series(term, -static_cast<double>(n) / d - offset, tol).real();
}

// C(n, k) / 2^p
inline double binomial_over_power_of_two(long long n, long long k, int p) {
  const double c = binomial(n, k);
  if (std::isfinite(c)) return std::ldexp(c, -p);
  return std::exp(log_binomial(n, k) - p * std::log(2.0));
}

// Even in n by construction: each sum is evaluated at |n|.
inline GridFunction compute_gaussian(GridDim dim, const GaussianFamily& fam, const Tolerances& tol) {
  const double kappa = fam.kappa_or_one();
  const int j = dim.j();
  switch (fam.kind()) {
    case GaussianKind::G1:
      return GridFunction::from_fn(
          dim, [&](int n) { return lattice_gaussian(dim, kappa, std::abs(n), 0.0, false, tol); });
    case GaussianKind::G2:
      return GridFunction::from_fn(
          dim, [&](int n) { return lattice_gaussian(dim, kappa, std::abs(n), 0.5, false, tol); });
    case GaussianKind::G3:
      return GridFunction::from_fn(dim, [&](int n) {
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        return sign * lattice_gaussian(dim, kappa, std::abs(n), 0.0, true, tol);
      });
    case GaussianKind::G4:
      return GridFunction::from_fn(dim, [&](int n) {
        return binomial_over_power_of_two(2 * j, j + n, 2 * j);
      });
    case GaussianKind::G5:
      return GridFunction::from_fn(dim, [&](int n) {
        return std::pow(std::cos(n * kPi / dim.d()), 2 * j) / std::sqrt(static_cast<double>(dim.d()));
      });
  }
  throw InvalidArgument("unknown Gaussian family");
}

// Values keyed on (d, family, exact kappa bits). Safe for concurrent use.
class GaussianCache {
 public:
  static GaussianCache& instance() {
    static GaussianCache cache;
    return cache;
  }

  void set_enabled(bool on) {
    std::unique_lock lock(mutex_);
    enabled_ = on;
    if (!on) entries_.clear();
  }
  bool enabled() const {
    std::shared_lock lock(mutex_);
    return enabled_;
  }
  void clear() {
    std::unique_lock lock(mutex_);
    entries_.clear();
  }

  template <class Make>
  GridFunction get(GridDim dim, const GaussianFamily& fam, Make&& make) {
    const Key key{dim.d(), static_cast<int>(fam.kind()),
                  std::bit_cast<std::uint64_t>(fam.kappa_or_one())};
    {
      std::shared_lock lock(mutex_);
      if (!enabled_) {
        lock.unlock();
        return make();
      }
      if (auto it = entries_.find(key); it != entries_.end()) return it->second;
    }
    GridFunction value = make();
    std::unique_lock lock(mutex_);
    if (enabled_) entries_.emplace(key, value);
    return value;
  }

 private:
  using Key = std::tuple<int, int, std::uint64_t>;
  mutable std::shared_mutex mutex_;
  bool enabled_ = true;
  std::map<Key, GridFunction> entries_;
};

}  // namespace detail

inline void set_gaussian_cache_enabled(bool on) { detail::GaussianCache::instance().set_enabled(on); }

// Raw (unnormalized) finite Gaussian. Only the default tolerances go through
// the cache.
inline GridFunction gaussian(GridDim dim, const GaussianFamily& fam,
                             const Tolerances& tol = default_tolerances()) {
  if (&tol != &default_tolerances()) return detail::compute_gaussian(dim, fam, tol);
  return detail::GaussianCache::instance().get(
      dim, fam, [&] { return detail::compute_gaussian(dim, fam, tol); });
}

inline GridFunction normalized_gaussian(GridDim dim, const GaussianFamily& fam,
                                        const Tolerances& tol = default_tolerances()) {
  return gaussian(dim, fam, tol).normalized();
}

// G_i = g_i / ||g_i|| with kappa = 1.
inline GridFunction standard_gaussian(GridDim dim, int i) {
  return normalized_gaussian(dim, GaussianFamily::standard(i));
}

// ||g||^2 without summing |g(n)|^2 over the grid. Supported for g1, g2, g3
// at kappa = 1 and for g4, g5.
inline double norm_squared_closed_form(GridDim dim, const GaussianFamily& fam) {
  const int j = dim.j();
  switch (fam.kind()) {
    case GaussianKind::G4:
    case GaussianKind::G5:
      return detail::binomial_over_power_of_two(4 * j, 2 * j, 4 * j);
    default:
      break;
  }
  if (fam.kappa_or_one() != 1.0) {
    throw InvalidArgument("closed-form norm is only available for kappa = 1");
  }
  const double a = gaussian(dim, GaussianFamily::g1(2.0))(0).real();
  const double b = gaussian(dim, GaussianFamily::g2(2.0))(0).real();
  const double s = std::sqrt(dim.d() / 2.0);
  if (fam.kind() == GaussianKind::G1) return s * (a * a + 2.0 * a * b - b * b);
  return s * (a * a + b * b);
}

}  // namespace finosc
