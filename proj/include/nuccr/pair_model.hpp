#pragma once

#include <complex>

#include "nuccr/params.hpp"
#include "nuccr/tensor.hpp"

namespace nuccr::pair {

/// Label order of the 64-dimensional lepton-antineutrino state. The
/// antineutrino moves along +z with right-handed initial chirality; the
/// lepton along -z, left-handed. Flavor qubits belong to the antineutrino.
inline const std::vector<std::string> state_labels = {
    "nubar_chirality", "nubar_spin", "flavor_e", "flavor_mu", "lepton_chirality",
    "lepton_spin"};

/// Weights of the two spin branches of the chirality-projected pair,
///   A = N_l N_nu f+_nu f-_l / sqrt(1/2 - p^2/(2 E_l E_nu)),
///   B = N_l N_nu f-_nu f+_l / sqrt(1/2 - p^2/(2 E_l E_nu)),
/// using mass eigenstate 1 for the antineutrino. A^2 + B^2 = 1, and A >= B
/// whenever m_l >= m1.
struct PairCoefficients {
  double a;
  double b;
};
PairCoefficients pair_amplitudes(const PhysParams& par);

/// The chirality-projected spin singlet at t = 0: project the two-particle
/// state (v_up(p) u_down(-p) - v_down(p) u_up(-p))/sqrt(2) with
/// Pi_R (x) Pi_L, normalize, and attach the |1_e 0_mu> flavor factor.
LabeledState initial_pair_state(const PhysParams& par);

/// The four branch coefficients of the evolved pair state for chirality
/// signs c (antineutrino) and c' (lepton), both gamma5 eigenvalues (+1 =
/// right). g1/g2 weight the spin up-down branch with flavor e/mu, g3/g4 the
/// down-up branch (entering the state with a minus sign).
struct GammaCoeffs {
  std::complex<double> g1, g2, g3, g4;
};
GammaCoeffs gamma_coefficients(const PhysParams& par, int c_nubar, int c_lepton, double t);

/// Fault-injection hook for the verification suite: multiplies individual
/// branch coefficients before assembly so the path-comparison check can be
/// shown to catch a corrupted sign.
struct GammaSigns {
  double g1 = 1.0, g2 = 1.0, g3 = 1.0, g4 = 1.0;
};

/// Evolved pair state via free Dirac evolution of every bispinor factor
/// (the brute-force route).
LabeledState evolve_pair_state(const PhysParams& par, double t);

/// The same state assembled from the branch coefficients; agrees with
/// evolve_pair_state elementwise to rounding.
LabeledState evolve_pair_state_gamma(const PhysParams& par, double t,
                                     const GammaSigns& signs = {});

enum class PairParticle { lepton, nubar1, nubar2 };

/// h = 1 - (2 p^2/E^2) sin^2(E t), g = (p/E) sin(2 E t). The combination
/// h^2 + g^2 = 1 - 4 p^2 m^2 sin^4(E t)/E^4 never exceeds one.
struct HG {
  double h;
  double g;
};
HG hg_factors(const PhysParams& par, PairParticle which, double t);

/// Spin-spin reduced state on the ordered basis {|up_nu down_l>,
/// -|down_nu up_l>}; the sign on the second basis vector absorbs the
/// singlet's relative phase so that rho12(0) = +AB. Diagonal is constant
/// in time.
struct SpinDensity {
  double pop_ud;  ///< A^2
  double pop_du;  ///< B^2
  std::complex<double> rho12;

  Eigen::Matrix2cd block() const;
};

/// Closed form: rho12 = AB (h_l + i g_l)(cos^2 th (h_1 - i g_1)
///                                        + sin^2 th (h_2 - i g_2)).
SpinDensity spin_density_closed(const PhysParams& par, double t);

/// Brute-force route: 64-dimensional evolution, partial trace onto the two
/// spins, block extraction. Throws if the spin up-up / down-down sectors are
/// populated above 1e-12.
SpinDensity spin_density_brute(const PhysParams& par, double t);

/// A^4 + B^4 + 2 |rho12|^2 from the closed-form spin density; lies in
/// [1 - 2 A^2 B^2, 1].
double spin_purity(const PhysParams& par, double t);

/// Alternative published closed form for the spin purity, retained only for
/// the reconciliation report: it fails the purity(0) = 1 check for theta > 0
/// and is never used by the simulation. verify prints its deviation.
double spin_purity_alt_form(const PhysParams& par, double t);

/// Same, for the no-mixing (theta = 0) special case:
/// 1 - AB (1 - Gamma_l^2 Gamma_nu1^2).
double spin_purity_alt_form_nomixing(const PhysParams& par, double t);

/// 2|AB|: amplitude of the spin-spin oscillations and the t = 0 spin
/// entanglement. Equals m1 m_l / (E1 E_l - p^2) identically.
double entanglement_amplitude(const PhysParams& par);

/// Large-p limit of 2|AB|: 2 m_l m1 / (m_l^2 + m1^2).
double amplitude_limit_large_p(const PhysParams& par);

/// Dimensionally inconsistent variant of the large-p limit kept only for the
/// reconciliation report.
double amplitude_limit_alt_form(const PhysParams& par);

}  // namespace nuccr::pair
