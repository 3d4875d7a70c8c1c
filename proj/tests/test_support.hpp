#pragma once

#include <complex>
#include <random>

#include "nuccr/tensor.hpp"

namespace nuccr::test {

inline std::complex<double> random_amp(std::mt19937& rng) {
  std::normal_distribution<double> gauss;
  return {gauss(rng), gauss(rng)};
}

inline LabeledState random_state(std::mt19937& rng, std::vector<std::string> labels) {
  Eigen::VectorXcd amp(Eigen::Index{1} << labels.size());
  for (Eigen::Index i = 0; i < amp.size(); ++i) amp(i) = random_amp(rng);
  LabeledState s(std::move(labels), std::move(amp));
  s.normalize();
  return s;
}

/// Random mixture of a few random pure states (full-rank in general).
inline DensityMatrix random_density(std::mt19937& rng, std::vector<std::string> labels,
                                    int terms = 3) {
  const Eigen::Index dim = Eigen::Index{1} << labels.size();
  Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(dim, dim);
  std::uniform_real_distribution<double> unif(0.1, 1.0);
  double total = 0.0;
  for (int k = 0; k < terms; ++k) {
    const LabeledState s = random_state(rng, labels);
    const double w = unif(rng);
    mat += w * (s.amp * s.amp.adjoint());
    total += w;
  }
  return {std::move(labels), mat / total};
}

inline Eigen::Matrix2cd random_unitary_2x2(std::mt19937& rng) {
  Eigen::Matrix2cd m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(i, j) = random_amp(rng);
  const Eigen::HouseholderQR<Eigen::Matrix2cd> qr(m);
  return qr.householderQ();
}

inline double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace nuccr::test
