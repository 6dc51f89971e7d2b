#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

namespace finosc {

// log C(n, k) for 0 <= k <= n; -inf outside that range.
inline double log_binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  k = std::min(k, n - k);
  return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

// Extended binomial: zero unless 0 <= k <= n. Exact integer arithmetic
// (correctly rounded) while the value fits in 120 bits, log-gamma beyond.
inline double binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  constexpr unsigned __int128 kLimit = static_cast<unsigned __int128>(1) << 120;
  unsigned __int128 c = 1;
  for (long long i = 1; i <= k; ++i) {
    if (c > kLimit / static_cast<unsigned __int128>(n)) return std::exp(log_binomial(n, k));
    c = c * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
  }
  return static_cast<double>(c);
}

}  // namespace finosc
