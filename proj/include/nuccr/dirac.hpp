#pragma once

#include <Eigen/Dense>
#include <complex>

namespace nuccr {

/// Four complex amplitudes in the standard (Dirac) representation, ordered as
/// (upper up, upper down, lower up, lower down). Physical states are kept at
/// unit norm.
using Bispinor = Eigen::Vector4cd;

/// gamma5 eigenvalue labels: Left <-> -1, Right <-> +1 under the projector
/// convention (I +- gamma5)/2.
enum class Handedness { left, right };

/// sigma_z two-spinor labels |+> = up, |-> = down.
enum class Spin { up, down };

/// Spin projection along the particle's own momentum axis.
enum class Helicity { minus, plus };

/// Selects the momentum direction and initial chirality pattern of the free
/// evolutions: (anti)neutrinos move along +z; the lepton along -z. Neutrinos
/// and leptons start left-handed, antineutrinos right-handed.
enum class Species { neutrino, antineutrino, lepton };

enum class SpinorKind { u, v };

/// gamma^mu, mu in 0..3, standard representation. Entries are exact
/// (0, +-1, +-i), so algebraic identities hold without rounding.
Eigen::Matrix4cd gamma(int mu);

/// gamma5 = i gamma0 gamma1 gamma2 gamma3.
Eigen::Matrix4cd gamma5();

Eigen::Matrix4cd chirality_projector(Handedness h);

/// sqrt(p^2 + m^2); throws std::domain_error for negative inputs or p = m = 0.
double energy(double p, double m);

struct KinematicFactors {
  double f_plus;   ///< 1 + p/(E + m)
  double f_minus;  ///< 1 - p/(E + m)
  double norm;     ///< sqrt((E + m)/(4E)); satisfies norm^2 (f+^2 + f-^2) = 1
};

/// Requires m > 0.
KinematicFactors kinematic_factors(double p, double m);

/// Normalized positive-energy (u) and negative-energy (v) plane-wave spinors
/// for momentum q along z (signed) and sigma_z label s. v(q, s) is the
/// eigenvector pairing with phase exp(+iEt) when evolving at momentum -q.
Bispinor basis_spinor(SpinorKind kind, Spin s, double q, double m);

/// <b|gamma5|b> in [-1, 1]; throws if the norm deviates from 1 by more
/// than 1e-9.
double chirality_expectation(const Bispinor& b);

/// <b|Sigma_z|b>, conserved under the free evolution used here.
double spin_z_expectation(const Bispinor& b);

/// Free Dirac Hamiltonian for momentum q ez: H = q alpha_z + m gamma0.
Eigen::Matrix4cd dirac_hamiltonian(double q, double m);

/// exp(-iHt) psi computed with the exact spectral split
/// exp(-iHt) = e^{-iEt}(I + H/E)/2 + e^{+iEt}(I - H/E)/2, which keeps the
/// phase arguments E*t bit-identical with the closed-form expressions.
Bispinor evolve_bispinor(const Bispinor& initial, double q, double m, double t);

/// Time-evolved chirality-projected state of one particle: starts as the
/// chirality (x) spin eigenstate selected by the species and helicity, then
/// evolves freely at the species' momentum. Normalized for all t.
Bispinor evolve_mass_bispinor(Species sp, Helicity h, double mass, double p, double t);

/// Basis change from the Dirac representation to the chirality (x) spin qubit
/// product: index = 2*c + s with c = 0 for right (gamma5 = +1), 1 for left,
/// and s = 0 for spin up, 1 for spin down. Labels left-to-right map to
/// most-significant-first bits downstream.
Eigen::Vector4cd to_chirality_spin(const Bispinor& dirac_rep);
Bispinor from_chirality_spin(const Eigen::Vector4cd& qubit_rep);

/// The chirality (x) spin eigenstate |h, s> in the Dirac representation.
Bispinor chirality_spin_state(Handedness h, Spin s);

}  // namespace nuccr
