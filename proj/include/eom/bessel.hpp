#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace eom {

namespace detail {

inline double bessel_j_series(int n, double x) {
  // sum_k (-1)^k (x/2)^(2k+n) / (k! (k+n)!), for 0 < x < 2
  const double half = 0.5 * x;
  double term = std::exp(n * std::log(half) - std::lgamma(n + 1.0));
  double sum = term;
  const double q = half * half;
  for (int k = 0; k < 200; ++k) {
    term *= -q / ((k + 1.0) * (k + 1.0 + n));
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// Miller's backward recurrence normalised by J0 + 2 sum_k J_2k = 1.
inline double bessel_j_miller(int n, double x) {
  const double big = std::max(static_cast<double>(n), std::ceil(x));
  int start = static_cast<int>(big + 30.0 + 8.0 * std::cbrt(x) + std::sqrt(160.0 * big));
  start += start % 2;

  constexpr double kRescale = 1e250;
  const double two_over_x = 2.0 / x;
  double j_next = 0.0;  // J_{k+1}
  double j_cur = 1e-300;  // J_k, arbitrary seed
  double even_sum = 0.0;
  double result = 0.0;
  for (int k = start; k > 0; --k) {
    const double j_prev = k * two_over_x * j_cur - j_next;
    j_next = j_cur;
    j_cur = j_prev;  // now J_{k-1}
    if (std::abs(j_cur) > kRescale) {
      j_cur /= kRescale;
      j_next /= kRescale;
      result /= kRescale;
      even_sum /= kRescale;
    }
    if (k - 1 == n) result = j_cur;
    if ((k - 1) % 2 == 0 && k - 1 > 0) even_sum += j_cur;
  }
  const double norm = j_cur + 2.0 * even_sum;
  return result / norm;
}

}  // namespace detail

/// Bessel function of the first kind of integer order.
inline double bessel_j(int n, double x) {
  // J_{-n}(x) = (-1)^n J_n(x), J_n(-x) = (-1)^n J_n(x)
  double sign = 1.0;
  if (n < 0) {
    n = -n;
    if (n % 2) sign = -sign;
  }
  if (x < 0.0) {
    x = -x;
    if (n % 2) sign = -sign;
  }
  if (x == 0.0) return n == 0 ? 1.0 : 0.0;
  const double v = x < 2.0 ? detail::bessel_j_series(n, x) : detail::bessel_j_miller(n, x);
  return sign * v;
}

}  // namespace eom
