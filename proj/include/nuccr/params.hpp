#pragma once

#include <cmath>

namespace nuccr {

/// Kinematic inputs of both models, in natural units with m1 = 1 fixing the
/// scale: momenta and masses in units of m1, times in units of 1/m1.
///
/// Energies are derived once at construction, E_i = sqrt(p^2 + m_i^2), and
/// shared by every formula so that closed forms and brute-force evolutions
/// see bit-identical phase arguments.
struct PhysParams {
  double p = 0.0;    ///< momentum magnitude along +z for (anti)neutrinos, -z for the lepton
  double m1 = 1.0;   ///< lighter neutrino mass eigenvalue (== 1 by convention)
  double m2 = 1.0;   ///< heavier neutrino mass eigenvalue
  double m_l = 1.0;  ///< charged-lepton mass (pair model only)
  double theta = 0.0;  ///< mixing angle, radians, in [0, pi/2)

  double e1 = 1.0;  ///< sqrt(p^2 + m1^2)
  double e2 = 1.0;
  double e_l = 1.0;

  /// Validates p >= 0, masses > 0, theta in [0, pi/2) and fills the energies.
  /// Throws std::domain_error on invalid kinematics.
  static PhysParams make(double p, double theta, double m1, double m2, double m_l);

  /// Builds from the dimensionless knobs the CLI exposes. Defaults are the
  /// parameter set used throughout: sin^2(theta) = 0.306 and
  /// dm2 = m2^2 - m1^2 = 0.001 in units of m1^2.
  static PhysParams from_ratios(double p_over_m1, double sin2_theta = 0.306,
                                double dm2_over_m1sq = 0.001,
                                double ml_over_m1 = 10.0);

  /// E2 - E1, evaluated as (m2^2 - m1^2)/(E1 + E2) to avoid cancellation
  /// for near-degenerate masses.
  double delta_e() const { return (m2 * m2 - m1 * m1) / (e1 + e2); }

  double sin_2theta() const { return std::sin(2.0 * theta); }
  double cos_2theta() const { return std::cos(2.0 * theta); }

  /// Default time window: two full flavor periods, 4*pi/(E2 - E1).
  double default_t_max() const;
};

}  // namespace nuccr
