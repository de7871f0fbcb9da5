#pragma once

// Wigner d-matrices d^S(theta) = exp(-i theta S_y) by three routes, plus the
// Jacobi polynomials they are built from.
//
// Rows and columns are ordered dm = -S..S ascending. Entry (r, c) is
// d^S_{dm, dk}(theta) with dm = r - S, dk = c - S, so that
// d^S(pi)_{dm,dk} = (-1)^(S+dm) delta_{dm,-dk}.

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "eom/bessel.hpp"
#include "eom/errors.hpp"
#include "eom/numkernel.hpp"
#include "eom/su2_model.hpp"

namespace eom {

enum class WignerMethod { exponential, factorial_sum, jacobi };

inline const char* to_string(WignerMethod m) {
  switch (m) {
    case WignerMethod::exponential: return "exponential";
    case WignerMethod::factorial_sum: return "factorial-sum";
    case WignerMethod::jacobi: return "jacobi";
  }
  return "?";
}

/// Real orthogonal (2S+1)x(2S+1) rotation matrix about the y axis.
class WignerMatrix {
 public:
  WignerMatrix(Spin s, double theta, WignerMethod method)
      : spin_(s), theta_(theta), method_(method), n_(s.dimension()), entries_(n_ * n_) {}

  Spin spin() const noexcept { return spin_; }
  double theta() const noexcept { return theta_; }
  WignerMethod method() const noexcept { return method_; }
  std::size_t dimension() const noexcept { return n_; }

  double& operator()(std::size_t r, std::size_t c) noexcept { return entries_[r * n_ + c]; }
  double operator()(std::size_t r, std::size_t c) const noexcept { return entries_[r * n_ + c]; }

  /// Entry by mode offsets (dm, dk).
  double at(double dm, double dk) const {
    return (*this)(spin_.index_of(dm), spin_.index_of(dk));
  }

  ComplexMatrix to_complex() const {
    ComplexMatrix m(n_, n_);
    for (std::size_t i = 0; i < entries_.size(); ++i) m.data()[i] = entries_[i];
    return m;
  }

  double max_abs_diff(const WignerMatrix& other) const {
    double d = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i)
      d = std::max(d, std::abs(entries_[i] - other.entries_[i]));
    return d;
  }

 private:
  Spin spin_;
  double theta_;
  WignerMethod method_;
  std::size_t n_;
  std::vector<double> entries_;
};

namespace detail {

// Generalized binomial coefficient C(r, k) for real r and integer k >= 0.
inline long double binom_real(long double r, int k) {
  long double out = 1.0L;
  for (int j = 1; j <= k; ++j) out *= (r - k + j) / j;
  return out;
}

inline long double jacobi_series(int n, long double a, long double b, long double x) {
  long double sum = 0.0L;
  const long double xm = (x - 1.0L) / 2.0L;
  const long double xp = (x + 1.0L) / 2.0L;
  for (int k = 0; k <= n; ++k) {
    sum += binom_real(n + a, n - k) * binom_real(n + b, k) * std::pow(xm, k) *
           std::pow(xp, n - k);
  }
  return sum;
}

inline long double ipow(long double x, int k) {
  long double r = 1.0L;
  for (; k > 0; --k) r *= x;
  return r;
}

}  // namespace detail

/// Jacobi polynomial P_n^{(a,b)}(x) by the degree-ascending three-term
/// recurrence, in long double. Falls back to the explicit sum in the
/// degenerate case a + b = -2 where the recurrence coefficients are 0/0.
inline double jacobi_poly(int n, double a, double b, double x) {
  if (n < 0) throw ParameterError("jacobi_poly: degree must be >= 0");
  if (n == 0) return 1.0;
  const long double A = a, B = b, X = x;
  if (a + b == -2.0) return static_cast<double>(detail::jacobi_series(n, A, B, X));

  long double p_prev = 1.0L;
  long double p = (A + 1.0L) + (A + B + 2.0L) * (X - 1.0L) / 2.0L;
  const long double ab2 = A * A - B * B;
  for (int k = 2; k <= n; ++k) {
    const long double s = 2.0L * k + A + B;
    const long double denom = 2.0L * k * (k + A + B) * (s - 2.0L);
    const long double next =
        ((s - 1.0L) * (s * (s - 2.0L) * X + ab2) * p -
         2.0L * (k + A - 1.0L) * (k + B - 1.0L) * s * p_prev) /
        denom;
    p_prev = p;
    p = next;
  }
  return static_cast<double>(p);
}

/// d^S(theta) = exp(-i (theta/2) F), F = 2 S_y.
inline WignerMatrix wigner_d_exponential(Spin s, double theta) {
  const auto gens = build_generators(s);
  const ComplexMatrix gen = cplx{0.0, -0.5 * theta} * gens.F;
  const ComplexMatrix d = expm_skew_hermitian(gen);
  WignerMatrix out(s, theta, WignerMethod::exponential);
  // d is real up to rounding; imaginary parts are dropped.
  for (std::size_t r = 0; r < out.dimension(); ++r)
    for (std::size_t c = 0; c < out.dimension(); ++c) out(r, c) = d(r, c).real();
  return out;
}

inline constexpr double kFactorialMaxSpin = 25.0;

/// Explicit factorial sum for d^S_{m'm}(theta), with factorials via lgamma.
inline WignerMatrix wigner_d_factorial(Spin s, double theta) {
  if (s.value() > kFactorialMaxSpin) {
    throw CapabilityError("wigner_d_factorial: S > 25 overflows the factorial sum; "
                          "use wigner_d_exponential");
  }
  const int j2 = s.twice();
  const long double c = std::cos(0.5L * theta);
  const long double sn = std::sin(0.5L * theta);
  auto lfact = [](int k) { return std::lgamma(static_cast<long double>(k) + 1.0L); };

  WignerMatrix out(s, theta, WignerMethod::factorial_sum);
  const std::size_t n = s.dimension();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t col = 0; col < n; ++col) {
      // Integers j+m', j-m', j+m, j-m with m' = row offset, m = column offset.
      const int jpm1 = static_cast<int>(r), jmm1 = j2 - jpm1;
      const int jpm = static_cast<int>(col), jmm = j2 - jpm;
      const int diff = jpm1 - jpm;  // m' - m
      const long double pref = 0.5L * (lfact(jpm1) + lfact(jmm1) + lfact(jpm) + lfact(jmm));
      long double sum = 0.0L;
      const int k_lo = std::max(0, -diff);
      const int k_hi = std::min(jpm, jmm1);
      for (int k = k_lo; k <= k_hi; ++k) {
        const long double mag =
            std::exp(pref - lfact(jpm - k) - lfact(k) - lfact(diff + k) - lfact(jmm1 - k));
        const int pc = j2 - diff - 2 * k;  // 2j + m - m' - 2k
        const int ps = diff + 2 * k;
        const long double term = mag * detail::ipow(c, pc) * detail::ipow(sn, ps);
        sum += ((diff + k) % 2 == 0) ? term : -term;
      }
      out(r, col) = static_cast<double>(sum);
    }
  }
  return out;
}

/// Sign factor xi_{dm,dk} of the Jacobi form: +1 when dk >= dm, else
/// (-1)^(dm-dk). Fixed by agreement with wigner_d_exponential.
inline int wigner_jacobi_sign(int row, int col) {
  if (col >= row) return 1;
  return ((row - col) % 2 == 0) ? 1 : -1;
}

/// d^S_{dm,dk}(theta) = xi sqrt(s!(s+mu+nu)!/((s+mu)!(s+nu)!))
///   sin(theta/2)^mu cos(theta/2)^nu P_s^{(mu,nu)}(cos theta)
/// with mu = |dm-dk|, nu = |dm+dk|, s = S - (mu+nu)/2.
inline WignerMatrix wigner_d_jacobi(Spin s, double theta) {
  const int j2 = s.twice();
  const long double half = 0.5L * theta;
  const long double sn = std::sin(half);
  const long double c = std::cos(half);
  const double x = std::cos(theta);
  auto lfact = [](int k) { return std::lgamma(static_cast<long double>(k) + 1.0L); };

  WignerMatrix out(s, theta, WignerMethod::jacobi);
  const std::size_t n = s.dimension();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t col = 0; col < n; ++col) {
      // Twice the offsets: 2dm = 2r - 2S.
      const int m2 = 2 * static_cast<int>(r) - j2;
      const int k2 = 2 * static_cast<int>(col) - j2;
      const int mu = std::abs(m2 - k2) / 2;
      const int nu = std::abs(m2 + k2) / 2;
      const int deg = (j2 - std::max(std::abs(m2), std::abs(k2))) / 2;
      const long double norm =
          std::exp(0.5L * (lfact(deg) + lfact(deg + mu + nu) - lfact(deg + mu) - lfact(deg + nu)));
      const long double v = norm * detail::ipow(sn, mu) * detail::ipow(c, nu) *
                            jacobi_poly(deg, mu, nu, x);
      out(r, col) = wigner_jacobi_sign(static_cast<int>(r), static_cast<int>(col)) *
                    static_cast<double>(v);
    }
  }
  return out;
}

struct JacobiBesselPair {
  double lhs;  // n^-alpha P_n^{(alpha,beta)}(cos(z/n))
  double rhs;  // (z/2)^-alpha J_alpha(z)
};

/// Mehler-Heine limit of Jacobi polynomials at finite degree n.
inline JacobiBesselPair jacobi_bessel_limit_check(int alpha, double beta_param, double z, int n) {
  if (n < 1) throw ParameterError("jacobi_bessel_limit_check: n must be >= 1");
  if (alpha < 0) throw ParameterError("jacobi_bessel_limit_check: alpha must be >= 0");
  const double lhs =
      std::pow(static_cast<double>(n), -alpha) * jacobi_poly(n, alpha, beta_param, std::cos(z / n));
  const double rhs = std::pow(0.5 * z, -alpha) * bessel_j(alpha, z);
  return {lhs, rhs};
}

}  // namespace eom
