#include "nuccr/ccr.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nuccr {

namespace {

void check_partition(const std::vector<std::string>& all, const std::vector<std::string>& k) {
  if (k.empty()) throw std::invalid_argument("ccr: subsystem k is empty");
  for (const auto& l : k)
    if (std::find(all.begin(), all.end(), l) == all.end())
      throw std::invalid_argument("ccr: unknown label " + l);
  if (k.size() >= all.size())
    throw std::invalid_argument("ccr: k must be a proper subset of the system");
}

std::vector<std::string> complement(const std::vector<std::string>& all,
                                    const std::vector<std::string>& k) {
  std::vector<std::string> b;
  for (const auto& l : all)
    if (std::find(k.begin(), k.end(), l) == k.end()) b.push_back(l);
  return b;
}

Bits diag_entropy(const DensityMatrix& rho) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < rho.mat.rows(); ++i) {
    const double p = rho.mat(i, i).real();
    if (p > 1e-12) s -= p * std::log2(p);
  }
  return std::max(s, 0.0);
}

}  // namespace

double CCRReport::component(const std::string& name) const {
  for (const auto& [n, v] : components)
    if (n == name) return v;
  throw std::invalid_argument("CCRReport: no component named " + name);
}

CCRReport ccr_pure(const LabeledState& state, const std::vector<std::string>& k) {
  check_partition(state.labels, k);
  if (std::abs(state.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("ccr_pure: global state not normalized");

  const DensityMatrix rho_k = partial_trace(density(state), k);
  const Bits s = von_neumann_entropy(rho_k);
  const Bits s_diag = diag_entropy(rho_k);
  const double budget = static_cast<double>(k.size());  // log2 of 2^|k|

  CCRReport rep;
  rep.kind = CCRKind::pure_entropic;
  rep.components = {{"coherence", s_diag - s},
                    {"predictability", budget - s_diag},
                    {"entropy", s}};
  rep.budget = budget;
  rep.residual = (s_diag - s) + (budget - s_diag) + s - budget;
  return rep;
}

CCRReport ccr_mixed(const DensityMatrix& rho, const std::vector<std::string>& k) {
  check_partition(rho.labels, k);
  const auto b = complement(rho.labels, k);

  const DensityMatrix rho_k = partial_trace(rho, k);
  const DensityMatrix rho_b = partial_trace(rho, b);
  const Bits s = von_neumann_entropy(rho);
  const Bits s_k = von_neumann_entropy(rho_k);
  const Bits s_b = von_neumann_entropy(rho_b);
  const Bits s_diag_k = diag_entropy(rho_k);
  const double budget = static_cast<double>(k.size());

  const double cond = s - s_b;
  const double pred = budget - s_diag_k;
  const double coh = s_diag_k - s_k;
  const double mi = s_k + s_b - s;

  CCRReport rep;
  rep.kind = CCRKind::mixed;
  rep.components = {{"conditional_entropy", cond},
                    {"predictability", pred},
                    {"coherence", coh},
                    {"mutual_information", mi}};
  rep.budget = budget;
  rep.residual = cond + pred + coh + mi - budget;
  return rep;
}

}  // namespace nuccr
