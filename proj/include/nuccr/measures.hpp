#pragma once

#include <string>

#include "nuccr/tensor.hpp"

namespace nuccr {

/// All entropic quantities are in base-2 units.
using Bits = double;

/// -sum lambda log2 lambda over the spectrum, with 0 log 0 = 0; eigenvalues
/// below 1e-12 are dropped, values in [-1e-10, 0) are clamped to zero, and
/// anything more negative throws (it signals an upstream bug).
Bits von_neumann_entropy(const DensityMatrix& rho);

/// S(dephase(rho)) - S(rho), >= 0 up to rounding.
Bits relative_entropy_coherence(const DensityMatrix& rho);

/// log2(d) - S(dephase(rho)): the diagonal-entropy form, which closes the
/// complementarity identities exactly.
Bits predictability(const DensityMatrix& rho, int subsystem_dim);

/// S(rho^k) + S(rho^B) - S(rho) for the partition {k, complement}.
Bits mutual_information(const DensityMatrix& rho_kb, const std::vector<std::string>& k);

/// S(rho) - S(rho^B); negative values witness entanglement.
Bits conditional_entropy(const DensityMatrix& rho_kb, const std::vector<std::string>& k);

/// Wootters concurrence of a two-qubit state: decreasingly ordered square
/// roots lambda_i of the eigenvalues of rho (sy x sy) rho* (sy x sy), then
/// max(0, l1 - l2 - l3 - l4). Clamped to [0, 1].
double concurrence(const DensityMatrix& two_qubit_rho);

/// Binary entropy of (1 + sqrt(1 - C^2))/2; requires C in [0, 1].
Bits entanglement_of_formation(double concurrence_value);

/// -x log2 x - (1-x) log2(1-x) with the 0 log 0 = 0 convention.
Bits binary_entropy(double x);

struct QubitPV {
  double predictability;  ///< |rho^k_00 - rho^k_11|
  double visibility;      ///< 2 |rho^k_01|
  double concurrence;
  double residual;        ///< P^2 + V^2 + C^2 - 1
};

/// Predictability/visibility/concurrence triple of a pure two-qubit state,
/// reduced onto qubit k. Throws if the global purity is below 1 - 1e-9.
QubitPV qubit_pv(const LabeledState& pure_two_qubit, const std::string& k);

}  // namespace nuccr
