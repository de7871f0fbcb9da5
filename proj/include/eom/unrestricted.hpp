#pragma once

// Unrestricted (infinite-mode) modulator: Bessel sideband weights, the
// classical phase-modulated field, and comparison with the restricted model
// at large S.

#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "eom/bessel.hpp"
#include "eom/dynamics.hpp"
#include "eom/errors.hpp"
#include "eom/su2_model.hpp"

namespace eom {

struct ModulationIndex {
  double mu;
  double omega;
  double gamma;
  double T;
};

/// mu = (4 gamma / omega) sin(omega T / 2), and 2 gamma T as omega -> 0.
inline ModulationIndex modulation_index(double omega, double gamma, double T) {
  if (!std::isfinite(omega) || !std::isfinite(gamma) || !std::isfinite(T)) {
    throw ParameterError("modulation_index: inputs must be finite");
  }
  const double mu = std::abs(omega) * T < 1e-8
                        ? 2.0 * gamma * T
                        : 4.0 * gamma / omega * std::sin(0.5 * omega * T);
  return {mu, omega, gamma, T};
}

inline ModulationIndex modulation_index(const ModulatorParams& p) {
  return modulation_index(p.detuning(), p.gamma, p.T);
}

/// Smallest admissible sideband cutoff for unrestricted_occupations.
inline int minimum_cutoff(double mu) { return static_cast<int>(std::ceil(std::abs(mu))) + 20; }

/// Cutoff used for spectra and scans.
inline int default_cutoff(double mu) { return static_cast<int>(std::ceil(std::abs(mu))) + 30; }

/// J_n(mu)^2 for n = -M..M.
inline std::vector<double> unrestricted_occupations(const ModulationIndex& mi, int cutoff) {
  if (cutoff < minimum_cutoff(mi.mu)) {
    throw ParameterError("unrestricted_occupations: cutoff " + std::to_string(cutoff) +
                         " below ceil(|mu|) + 20");
  }
  std::vector<double> w(2 * static_cast<std::size_t>(cutoff) + 1);
  double total = 0.0;
  for (int n = -cutoff; n <= cutoff; ++n) {
    const double j = bessel_j(n, mi.mu);
    w[static_cast<std::size_t>(n + cutoff)] = j * j;
    total += j * j;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw ParameterError("unrestricted_occupations: truncated weights sum to " +
                         std::to_string(total));
  }
  return w;
}

/// Max |c_n - (-i)^n J_n(mu)| over |n| <= mu + 10, where c_n are the DFT
/// coefficients of t -> exp(-i mu cos t) over one period.
inline double classical_signal_check(double mu, std::size_t samples) {
  if (samples < 256 || !std::has_single_bit(samples)) {
    throw ParameterError("classical_signal_check: samples must be a power of two >= 256");
  }
  const int nmax = static_cast<int>(std::floor(std::abs(mu) + 10.0));
  std::vector<cplx> f(samples);
  const double dt = 2.0 * std::numbers::pi / static_cast<double>(samples);
  for (std::size_t j = 0; j < samples; ++j) {
    f[j] = std::polar(1.0, -mu * std::cos(dt * static_cast<double>(j)));
  }
  const cplx minus_i{0.0, -1.0};
  double worst = 0.0;
  for (int n = -nmax; n <= nmax; ++n) {
    cplx c = 0.0;
    for (std::size_t j = 0; j < samples; ++j) {
      c += f[j] * std::polar(1.0, n * dt * static_cast<double>(j));
    }
    c /= static_cast<double>(samples);
    const cplx expected = std::pow(minus_i, n) * bessel_j(n, mu);
    worst = std::max(worst, std::abs(c - expected));
  }
  return worst;
}

struct AsymptoticRow {
  int dm;
  double restricted;  // |R_{dm,0}|
  double bessel;      // |J_dm(mu)|
};

/// Pairs |R_{dm,0}| at finite S with the unrestricted |J_dm(mu)|.
inline std::vector<AsymptoticRow> asymptotic_compare(const ModulatorParams& p,
                                                     std::span<const int> dm_range) {
  if (p.detuning() == 0.0) {
    throw ParameterError("asymptotic_compare: the Bessel limit requires omega != 0");
  }
  const double limit = p.spin.value() / 10.0;
  for (int dm : dm_range) {
    if (std::abs(dm) > limit) {
      throw ParameterError("asymptotic_compare: |dm| must be <= S/10");
    }
  }
  const std::size_t c = p.spin.central_index();
  const auto prop = propagator(p);
  const double mu = modulation_index(p).mu;
  std::vector<AsymptoticRow> out;
  out.reserve(dm_range.size());
  for (int dm : dm_range) {
    const std::size_t r = p.spin.index_of(dm);
    out.push_back({dm, std::abs(prop.R(r, c)), std::abs(bessel_j(dm, mu))});
  }
  return out;
}

}  // namespace eom
