#pragma once

// Jacobi theta functions theta_2, theta_3, theta_4 by direct summation.

#include <algorithm>
#include <cmath>
#include <string>

#include "finosc/grid.hpp"
#include "finosc/tolerances.hpp"

namespace finosc {

enum class ThetaKind { Theta2 = 2, Theta3 = 3, Theta4 = 4 };

struct ThetaArgs {
  Complex z;
  Complex tau;  // Im(tau) > 0
};

namespace detail {

inline constexpr long long kMaxSeriesHalfWidth = 1LL << 22;

// Sums term(a) for a = -A..A, widening A until both of the next terms fall
// below tol.series_relative times the accumulated magnitude. `peak` is where
// |term| is largest; A never stops short of it.
template <class Term>
Complex symmetric_series(Term&& term, double peak, const Tolerances& tol) {
  long long a = std::max<long long>(tol.series_min_terms,
                                    static_cast<long long>(std::ceil(std::abs(peak))) + 1);
  if (a > kMaxSeriesHalfWidth) {
    throw ConvergenceFailure("series peak lies beyond the term cap");
  }
  Complex sum = 0.0;
  double magnitude = 0.0;
  for (long long k = -a; k <= a; ++k) {
    const Complex t = term(k);
    sum += t;
    magnitude += std::abs(t);
  }
  for (;;) {
    const Complex lo = term(-a - 1);
    const Complex hi = term(a + 1);
    if (std::max(std::abs(lo), std::abs(hi)) <= tol.series_relative * magnitude) break;
    sum += lo + hi;
    magnitude += std::abs(lo) + std::abs(hi);
    if (++a > kMaxSeriesHalfWidth) {
      throw ConvergenceFailure("lattice series did not converge within " +
                               std::to_string(2 * kMaxSeriesHalfWidth + 1) + " terms");
    }
  }
  return sum;
}

}  // namespace detail

//   theta_3(z, tau) = sum_a e^{i pi tau a^2} e^{2 pi i a z}
//   theta_4(z, tau) = sum_a (-1)^a e^{i pi tau a^2} e^{2 pi i a z}
//   theta_2(z, tau) = sum_a e^{i pi tau (a+1/2)^2} e^{2 pi i (a+1/2) z}
inline Complex theta(ThetaKind kind, const ThetaArgs& args,
                     const Tolerances& tol = default_tolerances()) {
  const double im_tau = args.tau.imag();
  if (!(im_tau > 0.0)) {
    throw InvalidArgument("theta series needs Im(tau) > 0, got " + std::to_string(im_tau));
  }
  const Complex tau = args.tau;
  const Complex z = args.z;
  const double shift = kind == ThetaKind::Theta2 ? 0.5 : 0.0;
  const double peak = -z.imag() / im_tau - shift;
  auto term = [&](long long a) {
    const double x = static_cast<double>(a) + shift;
    Complex t = std::exp(kI * kPi * (tau * x * x + 2.0 * x * z));
    if (kind == ThetaKind::Theta4 && (a & 1)) t = -t;
    return t;
  };
  return detail::symmetric_series(term, peak, tol);
}

}  // namespace finosc
