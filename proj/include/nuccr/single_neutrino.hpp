#pragma once

#include <array>
#include <complex>

#include "nuccr/measures.hpp"
#include "nuccr/params.hpp"
#include "nuccr/tensor.hpp"

namespace nuccr::single_nu {

/// Label order of the 16-dimensional state: chirality, spin, flavor occupation
/// qubits. The flavor-qubit correspondence encodes |nu_e> as |1_e 0_mu> and
/// |nu_mu> as |0_e 1_mu>; the |00> and |11> occupation states stay empty.
inline const std::vector<std::string> state_labels = {"chirality", "spin", "flavor_e",
                                                      "flavor_mu"};

/// Chirality amplitude of mass eigenstate i in {1, 2}. The branch label c uses
/// the convention of the closed forms: c = +1 is the amplitude for retaining
/// the initial (left) chirality, cos(E_i t) - i (p/E_i) sin(E_i t); c = -1 is
/// the flip amplitude -i (m_i/E_i) sin(E_i t). |w(+1)|^2 + |w(-1)|^2 = 1.
std::complex<double> omega(const PhysParams& par, int mass_index, int c, double t);

struct FlavorAmps {
  std::complex<double> delta_e;
  std::complex<double> delta_mu;
};

/// Flavor amplitudes of the chirality branch c:
/// delta_e = cos^2(theta) w1 + sin^2(theta) w2,
/// delta_mu = sin(2 theta)/2 (w1 - w2). Summed over c the moduli add to 1.
FlavorAmps delta_coeffs(const PhysParams& par, int c, double t);

/// The full chirality-spin-flavor state at time t, built by free Dirac
/// evolution of the two mass-eigenstate bispinors (the brute-force route; the
/// closed forms below never feed into it). Normalized; the spin factor stays
/// exactly |down>.
LabeledState build_state(const PhysParams& par, double t);

/// Oscillation kernels entering every flavor-sector closed form:
///   G = 1 - ((p^2 + m1 m2)/(E1 E2)) sin(E1 t) sin(E2 t) - cos(E1 t) cos(E2 t)
///   H = (p/E1) sin(E1 t) cos(E2 t) - (p/E2) cos(E1 t) sin(E2 t)
/// G lies in [0, 2].
double kernel_g(const PhysParams& par, double t);
double kernel_h(const PhysParams& par, double t);

/// The populated 2x2 block of the flavor-reduced state on the ordered basis
/// {|1_e 0_mu>, |0_e 1_mu>}.
struct FlavorDensity {
  double rho11;
  double rho22;
  std::complex<double> rho12;

  Eigen::Matrix2cd block() const;
  /// Eigenvalues (1 +- sqrt(2 Tr rho^2 - 1))/2 of the block.
  std::array<double, 2> eigenvalues() const;
};

/// Closed form: rho11 = 1 - (sin^2(2theta)/2) G, rho12 = (sin(2theta)
/// cos(2theta)/2) G + i (sin(2theta)/2) H.
FlavorDensity flavor_density_closed(const PhysParams& par, double t);

/// Brute-force route: build_state -> partial trace onto the flavor pair ->
/// extract the populated block. Throws if the |00>/|11> occupation states
/// carry more than 1e-12 population.
FlavorDensity flavor_density_brute(const PhysParams& par, double t);

/// P_ee(t) = 1 - (sin^2(2theta)/2) G(t); bounded below by 1 - sin^2(2theta).
double survival_probability(const PhysParams& par, double t);

/// 1 - sin^2(2theta) sin^2((E2 - E1) t / 2), the familiar two-flavor formula
/// recovered in the relativistic limit.
double survival_probability_standard(const PhysParams& par, double t);

/// Tr rho_{e mu}^2 = 1 + (sin^2(2theta)/2)(G^2 + H^2 - 2G).
double flavor_purity_closed(const PhysParams& par, double t);

/// Binary entropy of (1 + sqrt(2 Tr rho^2 - 1))/2 from the closed purity.
Bits flavor_entropy(const PhysParams& par, double t);

}  // namespace nuccr::single_nu
