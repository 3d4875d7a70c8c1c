#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nuccr/measures.hpp"
#include "nuccr/tensor.hpp"

namespace nuccr {

enum class CCRKind { pure_entropic, mixed, qubit_pure };

/// One complementarity budget for a subsystem k: named components that must
/// add up to log2(d_k). The residual is always reported, never asserted away;
/// the CLI prints it and the tests bound it.
struct CCRReport {
  CCRKind kind;
  std::vector<std::pair<std::string, double>> components;  ///< in emission order
  double budget;    ///< log2(d_k)
  double residual;  ///< sum(components) - budget

  double component(const std::string& name) const;  ///< throws on unknown name
};

/// Pure-state form: coherence + predictability + entropy = log2(d_k) for the
/// reduction of a normalized global state onto k (proper non-empty subset).
CCRReport ccr_pure(const LabeledState& global_state, const std::vector<std::string>& k);

/// Mixed-state form: S_{k|B} + predictability + coherence + I_{k:B} = log2(d_k).
CCRReport ccr_mixed(const DensityMatrix& rho, const std::vector<std::string>& k);

}  // namespace nuccr
