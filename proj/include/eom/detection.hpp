#pragma once

// Gaussian Fabry-Perot filter and the relative photon counting rate as a
// function of filter detuning from the carrier.

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "eom/dynamics.hpp"
#include "eom/errors.hpp"
#include "eom/su2_model.hpp"
#include "eom/unrestricted.hpp"

namespace eom {

/// Gaussian transmission exp(-((omega - center)/half_width)^2); the kernel
/// falls to 1/e at center +- half_width.
struct FilterSpec {
  double half_width = 4.0;
  double center = 0.0;

  void validate() const {
    if (!std::isfinite(half_width) || half_width <= 0.0) {
      throw ParameterError("filter half_width must be finite and > 0");
    }
    if (!std::isfinite(center)) throw ParameterError("filter center must be finite");
  }
};

inline double filter_kernel(const FilterSpec& f, double omega) {
  f.validate();
  const double u = (omega - f.center) / f.half_width;
  return std::exp(-u * u);
}

namespace detail {

// sum_k w_k K(Omega * offset_k, omega_f), offsets relative to the carrier.
inline double filtered_sum(std::span<const double> weights, double first_offset, double Omega,
                           double half_width, double omega_f) {
  double sum = 0.0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    const double u = (Omega * (first_offset + static_cast<double>(k)) - omega_f) / half_width;
    sum += weights[k] * std::exp(-u * u);
  }
  return sum;
}

}  // namespace detail

/// p_rel(omega_f) = sum_dm |R_{dm,0}|^2 K(omega_opt + Omega dm, omega_f),
/// with omega_f = omega_opt + omega_f_offset. f.center is ignored.
inline double relative_count_rate(const ModulatorParams& p, const FilterSpec& f,
                                  double omega_f_offset) {
  f.validate();
  const auto occ = mode_occupations(p, 1.0);
  return detail::filtered_sum(occ, -p.spin.value(), p.Omega, f.half_width, omega_f_offset);
}

struct SpectralScan {
  std::vector<double> frequencies;  // omega_f - omega_opt, absolute units
  std::vector<double> restricted;
  std::vector<double> unrestricted;
  ModulatorParams params;
};

/// Restricted and unrestricted count-rate curves on a common grid. The
/// unrestricted curve uses weights J_n(mu)^2 for |n| <= ceil(mu) + 30 at
/// sideband positions Omega n.
inline SpectralScan spectral_scan(const ModulatorParams& p, const FilterSpec& f,
                                  std::span<const double> grid) {
  f.validate();
  if (grid.empty()) throw ParameterError("spectral_scan: empty grid");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw ParameterError("spectral_scan: grid must be strictly increasing");
    }
  }
  const auto occ = mode_occupations(p, 1.0);
  const auto mi = modulation_index(p);
  const int cutoff = default_cutoff(mi.mu);
  const auto bessel_w = unrestricted_occupations(mi, cutoff);

  SpectralScan out{{grid.begin(), grid.end()}, {}, {}, p};
  out.restricted.reserve(grid.size());
  out.unrestricted.reserve(grid.size());
  for (double w : grid) {
    out.restricted.push_back(
        detail::filtered_sum(occ, -p.spin.value(), p.Omega, f.half_width, w));
    out.unrestricted.push_back(
        detail::filtered_sum(bessel_w, -static_cast<double>(cutoff), p.Omega, f.half_width, w));
  }
  return out;
}

}  // namespace eom
