#include "nuccr/params.hpp"

#include <numbers>
#include <stdexcept>

#include "nuccr/dirac.hpp"

namespace nuccr {

PhysParams PhysParams::make(double p, double theta, double m1, double m2, double m_l) {
  if (p < 0.0) throw std::domain_error("PhysParams: momentum must be >= 0");
  if (m1 <= 0.0 || m2 <= 0.0 || m_l <= 0.0)
    throw std::domain_error("PhysParams: masses must be > 0");
  if (theta < 0.0 || theta >= std::numbers::pi / 2.0)
    throw std::domain_error("PhysParams: mixing angle must lie in [0, pi/2)");
  PhysParams par;
  par.p = p;
  par.m1 = m1;
  par.m2 = m2;
  par.m_l = m_l;
  par.theta = theta;
  par.e1 = energy(p, m1);
  par.e2 = energy(p, m2);
  par.e_l = energy(p, m_l);
  return par;
}

PhysParams PhysParams::from_ratios(double p_over_m1, double sin2_theta,
                                   double dm2_over_m1sq, double ml_over_m1) {
  if (sin2_theta < 0.0 || sin2_theta >= 1.0)
    throw std::domain_error("PhysParams: sin^2(theta) must lie in [0, 1)");
  if (dm2_over_m1sq < 0.0)
    throw std::domain_error("PhysParams: squared-mass splitting must be >= 0");
  const double theta = std::asin(std::sqrt(sin2_theta));
  return make(p_over_m1, theta, 1.0, std::sqrt(1.0 + dm2_over_m1sq), ml_over_m1);
}

double PhysParams::default_t_max() const {
  const double de = delta_e();
  if (de <= 0.0)
    throw std::domain_error("PhysParams: degenerate masses have no flavor period");
  return 4.0 * std::numbers::pi / de;
}

}  // namespace nuccr
