#include "nuccr/dirac.hpp"

#include <cmath>
#include <stdexcept>

namespace nuccr {

namespace {

constexpr std::complex<double> I{0.0, 1.0};

Eigen::Matrix2cd pauli(int k) {
  Eigen::Matrix2cd s;
  switch (k) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -I, I, 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("pauli: index must be 1..3");
  }
  return s;
}

}  // namespace

Eigen::Matrix4cd gamma(int mu) {
  Eigen::Matrix4cd g = Eigen::Matrix4cd::Zero();
  if (mu == 0) {
    g.block<2, 2>(0, 0) = Eigen::Matrix2cd::Identity();
    g.block<2, 2>(2, 2) = -Eigen::Matrix2cd::Identity();
    return g;
  }
  if (mu >= 1 && mu <= 3) {
    const Eigen::Matrix2cd s = pauli(mu);
    g.block<2, 2>(0, 2) = s;
    g.block<2, 2>(2, 0) = -s;
    return g;
  }
  throw std::invalid_argument("gamma: index must be 0..3");
}

Eigen::Matrix4cd gamma5() {
  return (I * gamma(0) * gamma(1) * gamma(2) * gamma(3)).eval();
}

Eigen::Matrix4cd chirality_projector(Handedness h) {
  const double sign = (h == Handedness::right) ? 1.0 : -1.0;
  return 0.5 * (Eigen::Matrix4cd::Identity() + sign * gamma5());
}

double energy(double p, double m) {
  if (p < 0.0 || m < 0.0) throw std::domain_error("energy: negative input");
  if (p == 0.0 && m == 0.0) throw std::domain_error("energy: p and m both zero");
  return std::hypot(p, m);
}

KinematicFactors kinematic_factors(double p, double m) {
  if (m <= 0.0) throw std::domain_error("kinematic_factors: mass must be > 0");
  const double e = energy(p, m);
  const double r = p / (e + m);
  return {1.0 + r, 1.0 - r, std::sqrt((e + m) / (4.0 * e))};
}

Bispinor basis_spinor(SpinorKind kind, Spin s, double q, double m) {
  const double e = energy(std::abs(q), m);
  const double sz = (s == Spin::up) ? 1.0 : -1.0;
  const double k = q * sz / (e + m);  // sigma.q / (E + m) on the |s> spinor
  const double a = (kind == SpinorKind::u) ? 1.0 : k;
  const double b = (kind == SpinorKind::u) ? k : 1.0;
  Bispinor psi = Bispinor::Zero();
  const int sidx = (s == Spin::up) ? 0 : 1;
  psi(sidx) = a;
  psi(2 + sidx) = b;
  psi.normalize();
  return psi;
}

double chirality_expectation(const Bispinor& b) {
  if (std::abs(b.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("chirality_expectation: state not normalized");
  return (b.adjoint() * gamma5() * b)(0).real();
}

double spin_z_expectation(const Bispinor& b) {
  Eigen::Matrix4cd sz = Eigen::Matrix4cd::Zero();
  sz.block<2, 2>(0, 0) = pauli(3);
  sz.block<2, 2>(2, 2) = pauli(3);
  return (b.adjoint() * sz * b)(0).real();
}

Eigen::Matrix4cd dirac_hamiltonian(double q, double m) {
  Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
  h.block<2, 2>(0, 0) = m * Eigen::Matrix2cd::Identity();
  h.block<2, 2>(2, 2) = -m * Eigen::Matrix2cd::Identity();
  h.block<2, 2>(0, 2) = q * pauli(3);
  h.block<2, 2>(2, 0) = q * pauli(3);
  return h;
}

Bispinor evolve_bispinor(const Bispinor& initial, double q, double m, double t) {
  const double e = energy(std::abs(q), m);
  const Eigen::Matrix4cd h_over_e = dirac_hamiltonian(q, m) / e;
  const std::complex<double> phase_pos = std::polar(1.0, -e * t);
  const std::complex<double> phase_neg = std::polar(1.0, e * t);
  const Eigen::Vector4cd plus = 0.5 * (initial + h_over_e * initial);
  const Eigen::Vector4cd minus = 0.5 * (initial - h_over_e * initial);
  return phase_pos * plus + phase_neg * minus;
}

Bispinor evolve_mass_bispinor(Species sp, Helicity h, double mass, double p, double t) {
  if (p < 0.0) throw std::domain_error("evolve_mass_bispinor: momentum must be >= 0");
  double direction = 0.0;
  Handedness chir{};
  switch (sp) {
    case Species::neutrino:
      direction = 1.0;
      chir = Handedness::left;
      break;
    case Species::antineutrino:
      direction = 1.0;
      chir = Handedness::right;
      break;
    case Species::lepton:
      direction = -1.0;
      chir = Handedness::left;
      break;
    default:
      throw std::invalid_argument("evolve_mass_bispinor: unknown species");
  }
  const double hsign = (h == Helicity::plus) ? 1.0 : -1.0;
  const Spin s = (hsign * direction > 0.0) ? Spin::up : Spin::down;
  return evolve_bispinor(chirality_spin_state(chir, s), direction * p, mass, t);
}

Eigen::Vector4cd to_chirality_spin(const Bispinor& psi) {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Vector4cd q;
  q(0) = r * (psi(0) + psi(2));  // right, up
  q(1) = r * (psi(1) + psi(3));  // right, down
  q(2) = r * (psi(0) - psi(2));  // left, up
  q(3) = r * (psi(1) - psi(3));  // left, down
  return q;
}

Bispinor from_chirality_spin(const Eigen::Vector4cd& q) {
  const double r = 1.0 / std::sqrt(2.0);
  Bispinor psi;
  psi(0) = r * (q(0) + q(2));
  psi(1) = r * (q(1) + q(3));
  psi(2) = r * (q(0) - q(2));
  psi(3) = r * (q(1) - q(3));
  return psi;
}

Bispinor chirality_spin_state(Handedness h, Spin s) {
  Eigen::Vector4cd q = Eigen::Vector4cd::Zero();
  const int c = (h == Handedness::right) ? 0 : 1;
  const int sidx = (s == Spin::up) ? 0 : 1;
  q(2 * c + sidx) = 1.0;
  return from_chirality_spin(q);
}

}  // namespace nuccr
