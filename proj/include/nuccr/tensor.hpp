#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

namespace nuccr {

/// Normalized complex state vector over an ordered list of named qubits.
/// Labels map left-to-right to most-significant-to-least-significant bits of
/// the computational-basis index.
struct LabeledState {
  std::vector<std::string> labels;
  Eigen::VectorXcd amp;

  LabeledState() = default;
  /// Throws std::invalid_argument on duplicate labels or a dimension
  /// mismatch (amp.size() must equal 2^labels.size()).
  LabeledState(std::vector<std::string> labels_, Eigen::VectorXcd amp_);

  int num_qubits() const { return static_cast<int>(labels.size()); }
  double norm() const { return amp.norm(); }
  LabeledState& normalize();
};

LabeledState operator*(const std::complex<double>& c, const LabeledState& s);
/// Requires identical label lists.
LabeledState operator+(const LabeledState& a, const LabeledState& b);

/// Computational-basis state |bits> over the given labels, bits[i] in {0, 1}.
LabeledState computational_basis(std::vector<std::string> labels, const std::vector<int>& bits);

/// Kronecker product in label order; label sets must be disjoint.
LabeledState kron(const LabeledState& a, const LabeledState& b);
LabeledState kron(const LabeledState& a, const LabeledState& b, const LabeledState& c);

/// Hermitian, unit-trace matrix over named qubits, same bit convention as
/// LabeledState.
struct DensityMatrix {
  std::vector<std::string> labels;
  Eigen::MatrixXcd mat;

  int num_qubits() const { return static_cast<int>(labels.size()); }
  int dim() const { return static_cast<int>(mat.rows()); }
  int label_index(const std::string& name) const;  ///< throws on unknown label
};

/// |s><s| of a normalized state (rank-1 projector).
DensityMatrix density(const LabeledState& s);

/// Reduction onto `keep` (output labels in `keep` order); the complement is
/// summed over. `keep` must be a non-empty subset of rho.labels.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::string>& keep);

/// Tr rho^2 = sum |rho_ij|^2.
double purity(const DensityMatrix& rho);

/// Zeroes every off-diagonal entry in the computational basis.
DensityMatrix dephase(const DensityMatrix& rho);

/// Full invariant check (Hermiticity, unit trace, spectrum >= -eigen_tol);
/// throws std::runtime_error on violation. Used by tests and the verifier,
/// not on construction hot paths.
void validate_density(const DensityMatrix& rho, double herm_tol = 1e-12,
                      double trace_tol = 1e-12, double eigen_tol = 1e-10);

}  // namespace nuccr
