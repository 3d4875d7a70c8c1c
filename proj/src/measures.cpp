#include "nuccr/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nuccr {

namespace {

constexpr double kDropEigenvalue = 1e-12;
constexpr double kNegativeEigenTol = 1e-10;

Bits spectrum_entropy(const Eigen::VectorXd& eigenvalues) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    const double lam = eigenvalues(i);
    if (lam < -kNegativeEigenTol)
      throw std::domain_error("entropy: eigenvalue below -1e-10");
    if (lam < kDropEigenvalue) continue;
    s -= lam * std::log2(lam);
  }
  return std::max(s, 0.0);
}

void check_hermitian(const DensityMatrix& rho) {
  if ((rho.mat - rho.mat.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("entropy: non-Hermitian input");
}

Bits diagonal_entropy(const DensityMatrix& rho) {
  return spectrum_entropy(rho.mat.diagonal().real());
}

std::vector<std::string> complement_of(const DensityMatrix& rho,
                                       const std::vector<std::string>& k) {
  if (k.empty()) throw std::invalid_argument("partition: k is empty");
  for (const auto& l : k) rho.label_index(l);  // rejects unknown labels
  std::vector<std::string> b;
  for (const auto& l : rho.labels)
    if (std::find(k.begin(), k.end(), l) == k.end()) b.push_back(l);
  if (b.empty()) throw std::invalid_argument("partition: k covers the whole system");
  return b;
}

}  // namespace

Bits von_neumann_entropy(const DensityMatrix& rho) {
  check_hermitian(rho);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.mat, Eigen::EigenvaluesOnly);
  return spectrum_entropy(solver.eigenvalues());
}

Bits relative_entropy_coherence(const DensityMatrix& rho) {
  return diagonal_entropy(rho) - von_neumann_entropy(rho);
}

Bits predictability(const DensityMatrix& rho, int subsystem_dim) {
  if (subsystem_dim < rho.dim())
    throw std::invalid_argument("predictability: dimension smaller than the state");
  return std::log2(static_cast<double>(subsystem_dim)) - diagonal_entropy(rho);
}

Bits mutual_information(const DensityMatrix& rho_kb, const std::vector<std::string>& k) {
  const auto b = complement_of(rho_kb, k);
  return von_neumann_entropy(partial_trace(rho_kb, k)) +
         von_neumann_entropy(partial_trace(rho_kb, b)) - von_neumann_entropy(rho_kb);
}

Bits conditional_entropy(const DensityMatrix& rho_kb, const std::vector<std::string>& k) {
  const auto b = complement_of(rho_kb, k);
  return von_neumann_entropy(rho_kb) - von_neumann_entropy(partial_trace(rho_kb, b));
}

double concurrence(const DensityMatrix& rho) {
  if (rho.dim() != 4 || rho.num_qubits() != 2)
    throw std::invalid_argument("concurrence: two-qubit state required");
  Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;  // sigma_y x sigma_y
  const Eigen::Matrix4cd flipped = yy * rho.mat.conjugate() * yy;
  const Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(rho.mat * flipped, false);
  std::array<double, 4> lam{};
  for (int i = 0; i < 4; ++i)
    lam[i] = std::sqrt(std::max(0.0, solver.eigenvalues()(i).real()));
  std::sort(lam.begin(), lam.end(), std::greater<>());
  return std::clamp(lam[0] - lam[1] - lam[2] - lam[3], 0.0, 1.0);
}

Bits binary_entropy(double x) {
  if (x < 0.0 || x > 1.0) throw std::domain_error("binary_entropy: argument outside [0, 1]");
  double s = 0.0;
  if (x > 0.0) s -= x * std::log2(x);
  if (x < 1.0) s -= (1.0 - x) * std::log2(1.0 - x);
  return s;
}

Bits entanglement_of_formation(double c) {
  if (c < 0.0 || c > 1.0)
    throw std::domain_error("entanglement_of_formation: concurrence outside [0, 1]");
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

QubitPV qubit_pv(const LabeledState& state, const std::string& k) {
  if (state.num_qubits() != 2)
    throw std::invalid_argument("qubit_pv: two-qubit state required");
  if (std::abs(state.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("qubit_pv: state not normalized");
  const DensityMatrix rho = density(state);
  const DensityMatrix red = partial_trace(rho, {k});
  const double p = std::abs(red.mat(0, 0).real() - red.mat(1, 1).real());
  const double v = 2.0 * std::abs(red.mat(0, 1));
  const double c = concurrence(rho);
  return {p, v, c, p * p + v * v + c * c - 1.0};
}

}  // namespace nuccr
