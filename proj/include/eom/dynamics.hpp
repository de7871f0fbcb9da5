#pragma once

// Single-photon propagator of the restricted model and the quantities built
// on it: closed-form rotation angle, mode occupations, mean-field envelope,
// and revival scans over the coupling.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include "eom/errors.hpp"
#include "eom/numkernel.hpp"
#include "eom/su2_model.hpp"
#include "eom/wigner.hpp"

namespace eom {

/// R_{dm,dp}(T) in the rotating frame. The mode-dependent prefactor
/// exp(-i((m~ + dm) OmegaMW + omega m~) T) is kept in `phase_prefactor`;
/// it drops out of every |R|^2 observable.
struct PropagatorMatrix {
  ModulatorParams params;
  ComplexMatrix R;
  std::vector<cplx> phase_prefactor;

  cplx at(double dm, double dp) const {
    return R(params.spin.index_of(dm), params.spin.index_of(dp));
  }
};

/// R = sum_k d_{m,k}(2 beta) d_{p,k}(2 beta) exp(-i k 2 Gamma T).
inline PropagatorMatrix propagator(const ModulatorParams& p) {
  const MixingAngle ma = mixing_angle(p);  // validates; throws when Gamma = 0
  const Spin s = p.spin;
  const std::size_t n = s.dimension();
  const WignerMatrix d = wigner_d_exponential(s, ma.two_beta);

  ComplexMatrix scaled(n, n);
  ComplexMatrix dt(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const cplx ph = std::polar(1.0, -s.offset(k) * 2.0 * ma.Gamma * p.T);
    for (std::size_t r = 0; r < n; ++r) {
      scaled(r, k) = d(r, k) * ph;
      dt(k, r) = d(r, k);
    }
  }

  PropagatorMatrix out{p, scaled * dt, std::vector<cplx>(n)};
  const double w = p.detuning();
  for (std::size_t k = 0; k < n; ++k) {
    const double arg = ((p.m_tilde + s.offset(k)) * p.OmegaMW + w * p.m_tilde) * p.T;
    out.phase_prefactor[k] = std::polar(1.0, -arg);
  }
  return out;
}

struct ClosedFormAngles {
  double two_beta_tilde;  // in [0, pi]
  double sin_product;     // sin(2 beta) sin(Gamma T)
};

/// Rotation angle 2 beta~ with |R_{dm,dp}| = |d^S_{dm,dp}(2 beta~)|.
///
/// sin(2 beta~) = 2x sqrt(1 - x^2) with x = sin(2 beta) sin(Gamma T); the
/// branch is the principal arcsine for x^2 <= 1/2 and its supplement
/// otherwise, which is exactly 2 asin(|x|). That form is used because it
/// stays well conditioned near x^2 = 1/2.
inline ClosedFormAngles closed_form_angles(const ModulatorParams& p) {
  p.validate();
  if (p.detuning() == 0.0 && p.gamma == 0.0) return {0.0, 0.0};
  const MixingAngle ma = mixing_angle(p);
  const double x = std::sin(ma.two_beta) * std::sin(ma.Gamma * p.T);
  const double ax = std::min(1.0, std::abs(x));
  return {2.0 * std::asin(ax), x};
}

/// n0 |R_{dm,0}|^2 for dm = -S..S with only the central mode excited.
inline std::vector<double> mode_occupations(const ModulatorParams& p, double n0) {
  if (!(n0 >= 0.0) || !std::isfinite(n0)) {
    throw ParameterError("mode_occupations: n0 must be finite and >= 0");
  }
  const std::size_t c = p.spin.central_index();
  std::vector<double> out(p.spin.dimension());
  if (p.detuning() == 0.0 && p.gamma == 0.0) {
    // No coupling and no detuning: R is the identity.
    p.validate();
    out[c] = n0;
    return out;
  }
  const auto prop = propagator(p);
  for (std::size_t r = 0; r < out.size(); ++r) out[r] = n0 * std::norm(prop.R(r, c));
  return out;
}

/// sum_dm exp(-i dm OmegaMW T) R_{dm,0}(T), i.e. the mean output field with
/// the global carrier factor exp(-i omega_opt T) removed.
inline cplx mean_field_envelope(const ModulatorParams& p) {
  const std::size_t c = p.spin.central_index();
  if (p.detuning() == 0.0 && p.gamma == 0.0) {
    p.validate();
    return 1.0;
  }
  const auto prop = propagator(p);
  cplx sum = 0.0;
  for (std::size_t r = 0; r < p.spin.dimension(); ++r) sum += prop.phase_prefactor[r] * prop.R(r, c);
  // Undo exp(-i omega_opt T), omega_opt = m~ Omega.
  return sum * std::polar(1.0, p.m_tilde * p.Omega * p.T);
}

struct RevivalPoint {
  double gamma;
  double central_probability;  // |R_00|^2
};

inline double central_return_probability(const ModulatorParams& p) {
  const std::size_t c = p.spin.central_index();
  if (p.detuning() == 0.0 && p.gamma == 0.0) {
    p.validate();
    return 1.0;
  }
  return std::norm(propagator(p).R(c, c));
}

/// |R_00|^2 over a grid of couplings; results follow grid order.
inline std::vector<RevivalPoint> revival_scan(const ModulatorParams& base,
                                              std::span<const double> gamma_grid) {
  if (gamma_grid.empty()) throw ParameterError("revival_scan: empty gamma grid");
  std::vector<RevivalPoint> out;
  out.reserve(gamma_grid.size());
  for (double g : gamma_grid) {
    ModulatorParams p = base;
    p.gamma = g;
    out.push_back({g, central_return_probability(p)});
  }
  return out;
}

/// Largest interior local maximum of a revival scan with gamma in [lo, hi],
/// refined by a parabola through the peak and its neighbours and then
/// re-evaluated at the refined coupling.
inline std::optional<RevivalPoint> revival_peak(const ModulatorParams& base,
                                                std::span<const double> gamma_grid, double lo,
                                                double hi) {
  const auto scan = revival_scan(base, gamma_grid);
  std::optional<std::size_t> best;
  for (std::size_t i = 1; i + 1 < scan.size(); ++i) {
    if (scan[i].gamma < lo || scan[i].gamma > hi) continue;
    const double v = scan[i].central_probability;
    if (v >= scan[i - 1].central_probability && v >= scan[i + 1].central_probability &&
        (!best || v > scan[*best].central_probability)) {
      best = i;
    }
  }
  if (!best) return std::nullopt;

  const auto& a = scan[*best - 1];
  const auto& b = scan[*best];
  const auto& c = scan[*best + 1];
  const double d1 = (b.central_probability - a.central_probability) / (b.gamma - a.gamma);
  const double d2 = (c.central_probability - b.central_probability) / (c.gamma - b.gamma);
  const double curv = (d2 - d1) / (c.gamma - a.gamma);
  double g = b.gamma;
  if (curv < 0.0) {
    // Vertex of the interpolating parabola.
    g = 0.5 * (a.gamma + b.gamma) - d1 / (2.0 * curv);
    g = std::clamp(g, a.gamma, c.gamma);
  }
  ModulatorParams p = base;
  p.gamma = g;
  const double v = central_return_probability(p);
  if (v < b.central_probability) return b;
  return RevivalPoint{g, v};
}

}  // namespace eom
