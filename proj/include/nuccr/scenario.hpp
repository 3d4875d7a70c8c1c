#pragma once

#include <istream>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace nuccr::scenario {

enum class Model { single, pair };
enum class Quantity { purity, ccr, survival, entropy, spin_ccr_global, spin_ccr_parties,
                      amplitude };

const char* model_name(Model m);
const char* quantity_name(Quantity q);

/// Resolved run description. p_over_m1 is a list: time scans emit one table
/// per momentum, the pair amplitude scan uses the list as its abscissa.
struct ScenarioConfig {
  Model model = Model::single;
  Quantity quantity = Quantity::purity;
  std::vector<double> p_over_m1 = {0.1, 1.0, 10.0};
  double sin2_theta = 0.306;
  double dm2_over_m1sq = 0.001;
  double ml_over_m1 = 10.0;
  std::optional<double> t_max;  ///< defaults to 4*pi/(E2-E1) per momentum
  int steps = 4000;
  std::string out_path;  ///< empty = stdout
  int precision = 12;    ///< significant digits in emitted values
};

/// Bad user input (flags or config file).
class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical invariant failed while producing output (residual > 1e-8).
class invariant_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void validate(const ScenarioConfig& cfg);

/// One emitted table: rows ascending in the first column.
struct Table {
  double p_over_m1;       ///< NaN for the amplitude sweep
  double resolved_t_max;  ///< NaN for the amplitude sweep
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Evaluates the configured scan. Throws invariant_error if any emitted CCR
/// row has |residual| > 1e-8, usage_error on inconsistent configuration.
std::vector<Table> run_scenario(const ScenarioConfig& cfg);

/// `key = value` lines with '#' comments; returns the raw pairs.
/// Throws usage_error on malformed lines or repeated keys.
std::map<std::string, std::string> parse_config_file(std::istream& in);

/// Writes file values into cfg, skipping keys the command line already set
/// (flags win). Unknown keys and unparsable values raise usage_error.
void apply_config(ScenarioConfig& cfg, const std::map<std::string, std::string>& kv,
                  const std::set<std::string>& overridden);

/// One entry of the verification suite. Gated entries decide the exit status
/// via `pass`; ungated entries only report a deviation (the reconciliation
/// of alternative closed forms that are expected to disagree).
struct CheckResult {
  std::string name;
  double value;
  double tolerance;
  std::string relation;  ///< "<=" for bounds, ">" for must-exceed checks
  bool gated;
  bool pass;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_pass;  ///< over gated checks only
};

/// Runs the full invariant suite: CCR residuals over the momentum grid,
/// closed-form vs brute-force equivalences, limit checks, measure sanity,
/// the fault-injection self-test, and the alternative-form reconciliation.
VerifyReport run_verification(const std::vector<double>& p_list, double sin2_theta,
                              double dm2_over_m1sq, double ml_over_m1, int steps);

}  // namespace nuccr::scenario
