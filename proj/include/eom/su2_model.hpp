#pragma once

// Restricted modulator model: parameters, mode coupling, su(2) generators in
// the single-photon (spin-S) representation, and the quasi-energy operator.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>

#include "eom/errors.hpp"
#include "eom/numkernel.hpp"

namespace eom {

/// Half-integer spin S >= 1/2, stored as 2S. Modes are indexed 0..2S with
/// offset dm = index - S (ascending).
class Spin {
 public:
  static Spin from_twice(int twice_s) {
    if (twice_s < 1) {
      throw ParameterError("Spin: 2S+1 must be at least 2 (got 2S = " +
                           std::to_string(twice_s) + ")");
    }
    return Spin(twice_s);
  }

  static Spin from_value(double s) {
    const double twice = 2.0 * s;
    const double rounded = std::round(twice);
    if (!std::isfinite(s) || std::abs(twice - rounded) > 1e-9) {
      throw ParameterError("Spin: S must be a half-integer");
    }
    return from_twice(static_cast<int>(rounded));
  }

  int twice() const noexcept { return twice_; }
  double value() const noexcept { return 0.5 * twice_; }
  std::size_t dimension() const noexcept { return static_cast<std::size_t>(twice_) + 1; }
  bool is_integer() const noexcept { return twice_ % 2 == 0; }

  double offset(std::size_t index) const noexcept {
    return static_cast<double>(index) - value();
  }

  /// Index of mode offset dm; throws if dm is not on the ladder -S..S.
  std::size_t index_of(double dm) const {
    const double shifted = dm + value();
    const double rounded = std::round(shifted);
    if (!std::isfinite(dm) || std::abs(shifted - rounded) > 1e-9 || rounded < 0.0 ||
        rounded > twice_) {
      throw ParameterError("mode offset " + std::to_string(dm) +
                           " is not in the ladder -S..S for S = " + std::to_string(value()));
    }
    return static_cast<std::size_t>(rounded);
  }

  /// Index of the central mode dm = 0; only integer spins have one.
  std::size_t central_index() const {
    if (!is_integer()) {
      throw ParameterError("half-integer S has no central mode dm = 0");
    }
    return static_cast<std::size_t>(twice_ / 2);
  }

  friend bool operator==(Spin, Spin) = default;

 private:
  explicit Spin(int twice) : twice_(twice) {}
  int twice_;
};

/// Physical parameters of the restricted model. Frequencies are angular.
struct ModulatorParams {
  Spin spin = Spin::from_twice(6);
  double Omega = 30.0;    // optical mode spacing
  double OmegaMW = 29.9;  // microwave drive frequency
  double gamma = 0.0;     // effective coupling (gamma~ * b)
  double T = 0.0;         // interaction time
  double m_tilde = 0.0;   // central mode index, only shifts absolute frequencies
  double phi = 0.0;       // microwave phase; the model requires 0

  double detuning() const noexcept { return Omega - OmegaMW; }

  void validate() const {
    if (!std::isfinite(Omega) || Omega <= 0.0) {
      throw ParameterError("Omega must be finite and > 0");
    }
    if (!std::isfinite(OmegaMW)) throw ParameterError("OmegaMW must be finite");
    if (!std::isfinite(gamma) || gamma < 0.0) {
      throw ParameterError("gamma must be finite and >= 0");
    }
    if (!std::isfinite(T) || T < 0.0) throw ParameterError("T must be finite and >= 0");
    if (!std::isfinite(m_tilde)) throw ParameterError("m_tilde must be finite");
    if (phi != 0.0) {
      throw ParameterError("nonzero microwave phase phi is not supported");
    }
  }
};

/// Parameter set of the figure presets: S = 3, Omega = 30,
/// detuning 0.1, T = 2 pi / Omega.
inline ModulatorParams figure_params(double gamma) {
  ModulatorParams p;
  p.spin = Spin::from_twice(6);
  p.Omega = 30.0;
  p.OmegaMW = 30.0 - 0.1;
  p.gamma = gamma;
  p.T = 2.0 * std::numbers::pi / 30.0;
  return p;
}

/// f(dm) = sqrt((S+1+dm)(S-dm)), the coupling between modes dm and dm+1.
inline double coupling_weight(Spin s, double dm) {
  const std::size_t idx = s.index_of(dm);
  if (idx + 1 > static_cast<std::size_t>(s.twice())) {
    throw ParameterError("coupling_weight: dm must lie in -S..S-1");
  }
  const double S = s.value();
  const double d = s.offset(idx);
  return std::sqrt((S + 1.0 + d) * (S - d));
}

struct GeneratorSet {
  Spin spin;
  ComplexMatrix A0;
  ComplexMatrix Aplus;
  ComplexMatrix Aminus;
  ComplexMatrix F;  // 2 S_y
};

inline GeneratorSet build_generators(Spin s) {
  const std::size_t n = s.dimension();
  GeneratorSet g{s, ComplexMatrix(n, n), ComplexMatrix(n, n), ComplexMatrix(n, n),
                 ComplexMatrix(n, n)};
  const cplx i{0.0, 1.0};
  for (std::size_t k = 0; k < n; ++k) g.A0(k, k) = s.offset(k);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double f = coupling_weight(s, s.offset(k));
    g.Aplus(k + 1, k) = f;
    g.Aminus(k, k + 1) = f;
    // F_{dm,dk} = i (delta_{dm,dk-1} f(dk-1) - delta_{dm,dk+1} f(dk))
    g.F(k, k + 1) = i * f;
    g.F(k + 1, k) = -i * f;
  }
  return g;
}

/// K^2 = A0^2 + (A+A- + A-A+)/2
inline ComplexMatrix casimir(const GeneratorSet& g) {
  ComplexMatrix k2 = g.A0 * g.A0;
  k2 += 0.5 * (g.Aplus * g.Aminus + g.Aminus * g.Aplus);
  return k2;
}

struct MixingAngle {
  double Gamma;
  double two_beta;  // in [0, pi]
  double g_eff;     // 2 gamma / (2S+1)
};

inline double effective_coupling(const ModulatorParams& p) {
  return 2.0 * p.gamma / static_cast<double>(p.spin.dimension());
}

inline MixingAngle mixing_angle(const ModulatorParams& p) {
  p.validate();
  const double half_w = 0.5 * p.detuning();
  const double g = effective_coupling(p);
  if (half_w == 0.0 && g == 0.0) {
    throw DegenerateParameterError("mixing_angle: detuning and coupling both vanish");
  }
  // g >= 0 puts the angle in [0, pi]; cos and sin branches agree by construction.
  return MixingAngle{std::hypot(half_w, g), std::atan2(g, half_w), g};
}

/// Single-photon quasi-energy matrix  omega m~ I + omega A0 + g_eff (A+ + A-).
inline ComplexMatrix quasi_energy_matrix(const ModulatorParams& p) {
  p.validate();
  const auto gens = build_generators(p.spin);
  const double w = p.detuning();
  ComplexMatrix q = w * gens.A0;
  q += effective_coupling(p) * (gens.Aplus + gens.Aminus);
  for (std::size_t k = 0; k < q.rows(); ++k) q(k, k) += w * p.m_tilde;
  return q;
}

}  // namespace eom
