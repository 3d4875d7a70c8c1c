#include "nuccr/single_neutrino.hpp"

#include <cmath>
#include <stdexcept>

#include "nuccr/dirac.hpp"

namespace nuccr::single_nu {

namespace {

using std::complex;

double mass_of(const PhysParams& par, int i) {
  if (i == 1) return par.m1;
  if (i == 2) return par.m2;
  throw std::invalid_argument("mass index must be 1 or 2");
}

double energy_of(const PhysParams& par, int i) { return i == 1 ? par.e1 : par.e2; }

}  // namespace

complex<double> omega(const PhysParams& par, int mass_index, int c, double t) {
  const double m = mass_of(par, mass_index);
  const double e = energy_of(par, mass_index);
  if (c == 1) return {std::cos(e * t), -(par.p / e) * std::sin(e * t)};
  if (c == -1) return {0.0, -(m / e) * std::sin(e * t)};
  throw std::invalid_argument("omega: chirality branch must be +1 or -1");
}

FlavorAmps delta_coeffs(const PhysParams& par, int c, double t) {
  const complex<double> w1 = omega(par, 1, c, t);
  const complex<double> w2 = omega(par, 2, c, t);
  const double cth = std::cos(par.theta);
  const double sth = std::sin(par.theta);
  return {cth * cth * w1 + sth * sth * w2, 0.5 * par.sin_2theta() * (w1 - w2)};
}

LabeledState build_state(const PhysParams& par, double t) {
  const Eigen::Vector4cd psi1 = to_chirality_spin(
      evolve_mass_bispinor(Species::neutrino, Helicity::minus, par.m1, par.p, t));
  const Eigen::Vector4cd psi2 = to_chirality_spin(
      evolve_mass_bispinor(Species::neutrino, Helicity::minus, par.m2, par.p, t));

  const double cth = std::cos(par.theta);
  const double sth = std::sin(par.theta);
  const Eigen::Vector4cd branch_e = cth * cth * psi1 + sth * sth * psi2;
  const Eigen::Vector4cd branch_mu = cth * sth * (psi1 - psi2);

  const LabeledState bispinor_e({"chirality", "spin"}, branch_e);
  const LabeledState bispinor_mu({"chirality", "spin"}, branch_mu);
  const LabeledState nu_e = computational_basis({"flavor_e", "flavor_mu"}, {1, 0});
  const LabeledState nu_mu = computational_basis({"flavor_e", "flavor_mu"}, {0, 1});
  return kron(bispinor_e, nu_e) + kron(bispinor_mu, nu_mu);
}

double kernel_g(const PhysParams& par, double t) {
  const double s1 = std::sin(par.e1 * t), c1 = std::cos(par.e1 * t);
  const double s2 = std::sin(par.e2 * t), c2 = std::cos(par.e2 * t);
  return 1.0 - ((par.p * par.p + par.m1 * par.m2) / (par.e1 * par.e2)) * s1 * s2 - c1 * c2;
}

double kernel_h(const PhysParams& par, double t) {
  const double s1 = std::sin(par.e1 * t), c1 = std::cos(par.e1 * t);
  const double s2 = std::sin(par.e2 * t), c2 = std::cos(par.e2 * t);
  return (par.p / par.e1) * s1 * c2 - (par.p / par.e2) * c1 * s2;
}

Eigen::Matrix2cd FlavorDensity::block() const {
  Eigen::Matrix2cd m;
  m << rho11, rho12, std::conj(rho12), rho22;
  return m;
}

std::array<double, 2> FlavorDensity::eigenvalues() const {
  const double tr2 = rho11 * rho11 + rho22 * rho22 + 2.0 * std::norm(rho12);
  const double root = std::sqrt(std::max(0.0, 2.0 * tr2 - 1.0));
  return {0.5 * (1.0 + root), 0.5 * (1.0 - root)};
}

FlavorDensity flavor_density_closed(const PhysParams& par, double t) {
  const double g = kernel_g(par, t);
  const double h = kernel_h(par, t);
  const double s2t = par.sin_2theta();
  const double rho11 = 1.0 - 0.5 * s2t * s2t * g;
  const std::complex<double> rho12{0.5 * s2t * par.cos_2theta() * g, 0.5 * s2t * h};
  return {rho11, 1.0 - rho11, rho12};
}

FlavorDensity flavor_density_brute(const PhysParams& par, double t) {
  const DensityMatrix rho =
      partial_trace(density(build_state(par, t)), {"flavor_e", "flavor_mu"});
  // basis order |00>, |01>, |10>, |11>: only the middle block may be occupied
  if (std::abs(rho.mat(0, 0)) > 1e-12 || std::abs(rho.mat(3, 3)) > 1e-12)
    throw std::runtime_error("flavor reduction: unphysical occupation state populated");
  return {rho.mat(2, 2).real(), rho.mat(1, 1).real(), rho.mat(2, 1)};
}

double survival_probability(const PhysParams& par, double t) {
  const double s2t = par.sin_2theta();
  return 1.0 - 0.5 * s2t * s2t * kernel_g(par, t);
}

double survival_probability_standard(const PhysParams& par, double t) {
  const double s2t = par.sin_2theta();
  const double s = std::sin(0.5 * par.delta_e() * t);
  return 1.0 - s2t * s2t * s * s;
}

double flavor_purity_closed(const PhysParams& par, double t) {
  const double g = kernel_g(par, t);
  const double h = kernel_h(par, t);
  const double s2t = par.sin_2theta();
  return 1.0 + 0.5 * s2t * s2t * (g * g + h * h - 2.0 * g);
}

Bits flavor_entropy(const PhysParams& par, double t) {
  const double tr2 = flavor_purity_closed(par, t);
  if (tr2 < 0.5)
    throw std::domain_error("flavor_entropy: purity below 1/2 signals a bug");
  return binary_entropy(0.5 * (1.0 + std::sqrt(2.0 * tr2 - 1.0)));
}

}  // namespace nuccr::single_nu
