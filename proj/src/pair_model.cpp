#include "nuccr/pair_model.hpp"

#include <cmath>
#include <stdexcept>

#include "nuccr/dirac.hpp"

namespace nuccr::pair {

namespace {

using std::complex;

const std::vector<std::string> nubar_labels = {"nubar_chirality", "nubar_spin"};
const std::vector<std::string> flavor_labels = {"flavor_e", "flavor_mu"};
const std::vector<std::string> lepton_labels = {"lepton_chirality", "lepton_spin"};

LabeledState flavor_e_state() { return computational_basis(flavor_labels, {1, 0}); }
LabeledState flavor_mu_state() { return computational_basis(flavor_labels, {0, 1}); }

double f_of(const KinematicFactors& kf, int sign) {
  return sign > 0 ? kf.f_plus : kf.f_minus;
}

/// Chirality-branch amplitude of the evolved spin-up antineutrino bispinor
/// of mass m: sum over energy signs d of N^2 c^((d-1)/2) f_d f_{dc} e^{-idEt}.
complex<double> nubar_factor(double p, double m, double e, int c, double t) {
  const KinematicFactors kf = kinematic_factors(p, m);
  const double n2 = kf.norm * kf.norm;
  const complex<double> pos = std::polar(1.0, -e * t);
  const complex<double> neg = std::polar(1.0, e * t);
  return n2 * (f_of(kf, 1) * f_of(kf, c) * pos +
               static_cast<double>(c) * f_of(kf, -1) * f_of(kf, -c) * neg);
}

/// Chirality-branch amplitude of the evolved spin-down lepton bispinor:
/// sum over d' of d' N^2 c'^((d'-1)/2) f_{-d'} f_{d'c'} e^{-id'Et}.
complex<double> lepton_factor(double p, double m, double e, int c, double t) {
  const KinematicFactors kf = kinematic_factors(p, m);
  const double n2 = kf.norm * kf.norm;
  const complex<double> pos = std::polar(1.0, -e * t);
  const complex<double> neg = std::polar(1.0, e * t);
  return n2 * (f_of(kf, -1) * f_of(kf, c) * pos -
               static_cast<double>(c) * f_of(kf, 1) * f_of(kf, -c) * neg);
}

int chirality_bit(int c) { return c > 0 ? 0 : 1; }

void check_branch_sign(int c) {
  if (c != 1 && c != -1)
    throw std::invalid_argument("chirality sign must be +1 or -1");
}

struct ParticleKinematics {
  double m;
  double e;
};

ParticleKinematics kinematics_of(const PhysParams& par, PairParticle which) {
  switch (which) {
    case PairParticle::lepton: return {par.m_l, par.e_l};
    case PairParticle::nubar1: return {par.m1, par.e1};
    case PairParticle::nubar2: return {par.m2, par.e2};
  }
  throw std::invalid_argument("hg_factors: unknown particle index");
}

double gamma_big(const PhysParams& par, PairParticle which, double t) {
  const HG hg = hg_factors(par, which, t);
  return hg.h * hg.h + hg.g * hg.g;
}

}  // namespace

PairCoefficients pair_amplitudes(const PhysParams& par) {
  const KinematicFactors knu = kinematic_factors(par.p, par.m1);
  const KinematicFactors kl = kinematic_factors(par.p, par.m_l);
  const double bracket = 0.5 - par.p * par.p / (2.0 * par.e_l * par.e1);
  const double common = knu.norm * kl.norm / std::sqrt(bracket);
  return {common * knu.f_plus * kl.f_minus, common * knu.f_minus * kl.f_plus};
}

LabeledState initial_pair_state(const PhysParams& par) {
  const Eigen::Matrix4cd proj_r = chirality_projector(Handedness::right);
  const Eigen::Matrix4cd proj_l = chirality_projector(Handedness::left);

  const Bispinor v_up = basis_spinor(SpinorKind::v, Spin::up, par.p, par.m1);
  const Bispinor v_down = basis_spinor(SpinorKind::v, Spin::down, par.p, par.m1);
  const Bispinor u_down = basis_spinor(SpinorKind::u, Spin::down, -par.p, par.m_l);
  const Bispinor u_up = basis_spinor(SpinorKind::u, Spin::up, -par.p, par.m_l);

  const LabeledState nubar_up(nubar_labels, to_chirality_spin(proj_r * v_up));
  const LabeledState nubar_down(nubar_labels, to_chirality_spin(proj_r * v_down));
  const LabeledState lep_down(lepton_labels, to_chirality_spin(proj_l * u_down));
  const LabeledState lep_up(lepton_labels, to_chirality_spin(proj_l * u_up));

  LabeledState state = kron(nubar_up, flavor_e_state(), lep_down) +
                       complex<double>(-1.0) * kron(nubar_down, flavor_e_state(), lep_up);
  return state.normalize();
}

GammaCoeffs gamma_coefficients(const PhysParams& par, int c, int cp, double t) {
  check_branch_sign(c);
  check_branch_sign(cp);
  const PairCoefficients ab = pair_amplitudes(par);
  const double c2 = std::cos(par.theta) * std::cos(par.theta);
  const double s2 = std::sin(par.theta) * std::sin(par.theta);
  const double sc = std::sin(par.theta) * std::cos(par.theta);

  const complex<double> nu1 = nubar_factor(par.p, par.m1, par.e1, c, t);
  const complex<double> nu2 = nubar_factor(par.p, par.m2, par.e2, c, t);
  const complex<double> lep = lepton_factor(par.p, par.m_l, par.e_l, cp, t);

  const complex<double> w1_1 = nu1 * lep;
  const complex<double> w2_1 = nu2 * lep;
  const complex<double> w_2 = (nu1 - nu2) * lep;
  const double flip = -static_cast<double>(c) * static_cast<double>(cp);

  GammaCoeffs g;
  g.g1 = ab.a * (c2 * w1_1 + s2 * w2_1);
  g.g2 = ab.a * sc * w_2;
  g.g3 = ab.b * (c2 * flip * std::conj(w1_1) + s2 * flip * std::conj(w2_1));
  g.g4 = ab.b * sc * flip * std::conj(w_2);
  return g;
}

LabeledState evolve_pair_state(const PhysParams& par, double t) {
  const PairCoefficients ab = pair_amplitudes(par);
  const double c2 = std::cos(par.theta) * std::cos(par.theta);
  const double s2 = std::sin(par.theta) * std::sin(par.theta);
  const double sc = std::sin(par.theta) * std::cos(par.theta);

  const auto nubar = [&](double m, Helicity h) {
    return to_chirality_spin(evolve_mass_bispinor(Species::antineutrino, h, m, par.p, t));
  };
  const auto lepton = [&](Helicity h) {
    return LabeledState(lepton_labels, to_chirality_spin(evolve_mass_bispinor(
                                           Species::lepton, h, par.m_l, par.p, t)));
  };

  // Helicity + along +z is spin up for the antineutrino; helicity + along -z
  // is spin down for the lepton.
  const auto mixed_branch = [&](Helicity h) {
    const Eigen::Vector4cd psi1 = nubar(par.m1, h);
    const Eigen::Vector4cd psi2 = nubar(par.m2, h);
    return kron(LabeledState(nubar_labels, c2 * psi1 + s2 * psi2), flavor_e_state()) +
           kron(LabeledState(nubar_labels, sc * (psi1 - psi2)), flavor_mu_state());
  };

  return complex<double>(ab.a) * kron(mixed_branch(Helicity::plus), lepton(Helicity::plus)) +
         complex<double>(-ab.b) * kron(mixed_branch(Helicity::minus), lepton(Helicity::minus));
}

LabeledState evolve_pair_state_gamma(const PhysParams& par, double t,
                                     const GammaSigns& signs) {
  Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(64);
  for (int c : {1, -1})
    for (int cp : {1, -1}) {
      const GammaCoeffs g = gamma_coefficients(par, c, cp, t);
      const int cb = chirality_bit(c) << 5;
      const int cpb = chirality_bit(cp) << 1;
      // bits: nubar_chirality, nubar_spin, flavor_e, flavor_mu,
      //       lepton_chirality, lepton_spin
      amp(cb | 0 << 4 | 1 << 3 | 0 << 2 | cpb | 1) += signs.g1 * g.g1;
      amp(cb | 0 << 4 | 0 << 3 | 1 << 2 | cpb | 1) += signs.g2 * g.g2;
      amp(cb | 1 << 4 | 1 << 3 | 0 << 2 | cpb | 0) -= signs.g3 * g.g3;
      amp(cb | 1 << 4 | 0 << 3 | 1 << 2 | cpb | 0) -= signs.g4 * g.g4;
    }
  return {state_labels, std::move(amp)};
}

HG hg_factors(const PhysParams& par, PairParticle which, double t) {
  const auto [m, e] = kinematics_of(par, which);
  const double s = std::sin(e * t);
  return {1.0 - 2.0 * par.p * par.p / (e * e) * s * s,
          par.p / e * std::sin(2.0 * e * t)};
}

Eigen::Matrix2cd SpinDensity::block() const {
  Eigen::Matrix2cd m;
  m << pop_ud, rho12, std::conj(rho12), pop_du;
  return m;
}

SpinDensity spin_density_closed(const PhysParams& par, double t) {
  const PairCoefficients ab = pair_amplitudes(par);
  const double c2 = std::cos(par.theta) * std::cos(par.theta);
  const double s2 = std::sin(par.theta) * std::sin(par.theta);
  const HG l = hg_factors(par, PairParticle::lepton, t);
  const HG n1 = hg_factors(par, PairParticle::nubar1, t);
  const HG n2 = hg_factors(par, PairParticle::nubar2, t);
  const complex<double> lep{l.h, l.g};
  const complex<double> nubar = c2 * complex<double>{n1.h, -n1.g} +
                                s2 * complex<double>{n2.h, -n2.g};
  return {ab.a * ab.a, ab.b * ab.b, ab.a * ab.b * lep * nubar};
}

SpinDensity spin_density_brute(const PhysParams& par, double t) {
  const DensityMatrix rho =
      partial_trace(density(evolve_pair_state(par, t)), {"nubar_spin", "lepton_spin"});
  if (std::abs(rho.mat(0, 0)) > 1e-12 || std::abs(rho.mat(3, 3)) > 1e-12)
    throw std::runtime_error("spin reduction: aligned-spin sector populated");
  // The second basis vector carries the singlet's minus sign, hence -rho(1,2).
  return {rho.mat(1, 1).real(), rho.mat(2, 2).real(), -rho.mat(1, 2)};
}

double spin_purity(const PhysParams& par, double t) {
  const SpinDensity sd = spin_density_closed(par, t);
  return sd.pop_ud * sd.pop_ud + sd.pop_du * sd.pop_du + 2.0 * std::norm(sd.rho12);
}

double spin_purity_alt_form(const PhysParams& par, double t) {
  const PairCoefficients ab = pair_amplitudes(par);
  const double s2 = std::sin(par.theta) * std::sin(par.theta);
  const double c2 = std::cos(par.theta) * std::cos(par.theta);
  const double gl = gamma_big(par, PairParticle::lepton, t);
  const double g1 = gamma_big(par, PairParticle::nubar1, t);
  const double g2 = gamma_big(par, PairParticle::nubar2, t);
  const HG n1 = hg_factors(par, PairParticle::nubar1, t);
  const HG n2 = hg_factors(par, PairParticle::nubar2, t);
  const double braces =
      c2 * c2 * c2 * c2 * g1 * g1 + s2 * s2 * s2 * s2 * g2 * g2 +
      2.0 * s2 * c2 *
          (2.0 * c2 * c2 * g1 * g1 + 2.0 * s2 * s2 * g1 * g1 +
           s2 * c2 * (g1 * g1 + g2 * g2) + 2.0 * (n1.h * n2.h + n1.g * n2.g));
  return 1.0 - ab.a * ab.b * (1.0 - gl * gl * braces);
}

double spin_purity_alt_form_nomixing(const PhysParams& par, double t) {
  const PairCoefficients ab = pair_amplitudes(par);
  const double gl = gamma_big(par, PairParticle::lepton, t);
  const double g1 = gamma_big(par, PairParticle::nubar1, t);
  return 1.0 - ab.a * ab.b * (1.0 - gl * gl * g1 * g1);
}

double entanglement_amplitude(const PhysParams& par) {
  const PairCoefficients ab = pair_amplitudes(par);
  return 2.0 * std::abs(ab.a * ab.b);
}

double amplitude_limit_large_p(const PhysParams& par) {
  return 2.0 * par.m_l * par.m1 / (par.m_l * par.m_l + par.m1 * par.m1);
}

double amplitude_limit_alt_form(const PhysParams& par) {
  return 2.0 * par.m1 * par.m1 * par.m_l * par.m_l /
         (par.m1 * par.m1 + par.m_l * par.m_l);
}

}  // namespace nuccr::pair
