#include "nuccr/tensor.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace nuccr {

namespace {

void check_unique(const std::vector<std::string>& labels) {
  std::set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second)
      throw std::invalid_argument("duplicate subsystem label: " + l);
}

// Bit of basis index `idx` belonging to the label at position `pos`
// (position 0 = most significant).
int bit_at(int idx, int pos, int n) { return (idx >> (n - 1 - pos)) & 1; }

}  // namespace

LabeledState::LabeledState(std::vector<std::string> labels_, Eigen::VectorXcd amp_)
    : labels(std::move(labels_)), amp(std::move(amp_)) {
  check_unique(labels);
  if (amp.size() != (Eigen::Index{1} << labels.size()))
    throw std::invalid_argument("LabeledState: amplitude size is not 2^n");
}

LabeledState& LabeledState::normalize() {
  const double n = amp.norm();
  if (n == 0.0) throw std::invalid_argument("LabeledState: cannot normalize zero vector");
  amp /= n;
  return *this;
}

LabeledState operator*(const std::complex<double>& c, const LabeledState& s) {
  LabeledState out = s;
  out.amp *= c;
  return out;
}

LabeledState operator+(const LabeledState& a, const LabeledState& b) {
  if (a.labels != b.labels)
    throw std::invalid_argument("LabeledState addition requires identical labels");
  LabeledState out = a;
  out.amp += b.amp;
  return out;
}

LabeledState computational_basis(std::vector<std::string> labels, const std::vector<int>& bits) {
  if (bits.size() != labels.size())
    throw std::invalid_argument("computational_basis: one bit per label required");
  int idx = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) throw std::invalid_argument("computational_basis: bits must be 0/1");
    idx = (idx << 1) | b;
  }
  Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(Eigen::Index{1} << labels.size());
  amp(idx) = 1.0;
  return {std::move(labels), std::move(amp)};
}

LabeledState kron(const LabeledState& a, const LabeledState& b) {
  std::vector<std::string> labels = a.labels;
  labels.insert(labels.end(), b.labels.begin(), b.labels.end());
  check_unique(labels);
  Eigen::VectorXcd amp(a.amp.size() * b.amp.size());
  for (Eigen::Index i = 0; i < a.amp.size(); ++i)
    amp.segment(i * b.amp.size(), b.amp.size()) = a.amp(i) * b.amp;
  return {std::move(labels), std::move(amp)};
}

LabeledState kron(const LabeledState& a, const LabeledState& b, const LabeledState& c) {
  return kron(kron(a, b), c);
}

int DensityMatrix::label_index(const std::string& name) const {
  const auto it = std::find(labels.begin(), labels.end(), name);
  if (it == labels.end()) throw std::invalid_argument("unknown subsystem label: " + name);
  return static_cast<int>(it - labels.begin());
}

DensityMatrix density(const LabeledState& s) {
  return {s.labels, s.amp * s.amp.adjoint()};
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::string>& keep) {
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
  check_unique(keep);
  const int n = rho.num_qubits();
  std::vector<int> keep_pos;
  keep_pos.reserve(keep.size());
  for (const auto& l : keep) keep_pos.push_back(rho.label_index(l));

  std::vector<int> trace_pos;
  for (int i = 0; i < n; ++i)
    if (std::find(keep_pos.begin(), keep_pos.end(), i) == keep_pos.end())
      trace_pos.push_back(i);

  const int k = static_cast<int>(keep_pos.size());
  const int m = n - k;
  const int dk = 1 << k;
  const int dm = 1 << m;

  // Full basis index for kept bits `a` (in keep order) and traced bits `e`.
  const auto full_index = [&](int a, int e) {
    int idx = 0;
    for (int i = 0; i < k; ++i)
      idx |= bit_at(a, i, k) << (n - 1 - keep_pos[i]);
    for (int i = 0; i < m; ++i)
      idx |= bit_at(e, i, m) << (n - 1 - trace_pos[i]);
    return idx;
  };

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dk, dk);
  for (int a = 0; a < dk; ++a)
    for (int b = 0; b < dk; ++b) {
      std::complex<double> sum = 0.0;
      for (int e = 0; e < dm; ++e) sum += rho.mat(full_index(a, e), full_index(b, e));
      out(a, b) = sum;
    }
  return {keep, std::move(out)};
}

double purity(const DensityMatrix& rho) { return rho.mat.squaredNorm(); }

DensityMatrix dephase(const DensityMatrix& rho) {
  DensityMatrix out = rho;
  out.mat = rho.mat.diagonal().asDiagonal();
  return out;
}

void validate_density(const DensityMatrix& rho, double herm_tol, double trace_tol,
                      double eigen_tol) {
  if (rho.mat.rows() != rho.mat.cols() ||
      rho.mat.rows() != (Eigen::Index{1} << rho.labels.size()))
    throw std::runtime_error("density matrix: dimension does not match labels");
  if ((rho.mat - rho.mat.adjoint()).cwiseAbs().maxCoeff() > herm_tol)
    throw std::runtime_error("density matrix: not Hermitian");
  if (std::abs(rho.mat.trace().real() - 1.0) > trace_tol ||
      std::abs(rho.mat.trace().imag()) > trace_tol)
    throw std::runtime_error("density matrix: trace differs from 1");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.mat, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -eigen_tol)
    throw std::runtime_error("density matrix: negative eigenvalue");
}

}  // namespace nuccr
