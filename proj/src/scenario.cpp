#include "nuccr/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "nuccr/ccr.hpp"
#include "nuccr/measures.hpp"
#include "nuccr/pair_model.hpp"
#include "nuccr/params.hpp"
#include "nuccr/single_neutrino.hpp"
#include "nuccr/tensor.hpp"

namespace nuccr::scenario {

namespace {

constexpr double kEmittedResidualBound = 1e-8;
const std::vector<std::string> flavor_pair = {"flavor_e", "flavor_mu"};
const std::vector<std::string> spin_pair = {"nubar_spin", "lepton_spin"};

std::vector<double> time_grid(double t_max, int steps) {
  std::vector<double> t(steps);
  for (int i = 0; i < steps; ++i) t[i] = t_max * i / (steps - 1);
  return t;
}

double resolved_t_max(const ScenarioConfig& cfg, const PhysParams& par) {
  return cfg.t_max ? *cfg.t_max : par.default_t_max();
}

PhysParams params_for(const ScenarioConfig& cfg, double p) {
  return PhysParams::from_ratios(p, cfg.sin2_theta, cfg.dm2_over_m1sq, cfg.ml_over_m1);
}

void guard_residual(double residual) {
  if (std::abs(residual) > kEmittedResidualBound)
    throw invariant_error("CCR residual above 1e-8 while emitting rows");
}

Table scan_table(const ScenarioConfig& cfg, double p) {
  const PhysParams par = params_for(cfg, p);
  const double t_max = resolved_t_max(cfg, par);
  Table table;
  table.p_over_m1 = p;
  table.resolved_t_max = t_max;

  switch (cfg.quantity) {
    case Quantity::purity:
      if (cfg.model == Model::single) {
        table.columns = {"t", "purity"};
        for (double t : time_grid(t_max, cfg.steps))
          table.rows.push_back({t, single_nu::flavor_purity_closed(par, t)});
      } else {
        table.columns = {"t", "purity"};
        for (double t : time_grid(t_max, cfg.steps))
          table.rows.push_back({t, pair::spin_purity(par, t)});
      }
      break;
    case Quantity::survival:
      table.columns = {"t", "survival", "survival_standard"};
      for (double t : time_grid(t_max, cfg.steps))
        table.rows.push_back({t, single_nu::survival_probability(par, t),
                              single_nu::survival_probability_standard(par, t)});
      break;
    case Quantity::entropy:
      table.columns = {"t", "entropy"};
      for (double t : time_grid(t_max, cfg.steps))
        table.rows.push_back({t, single_nu::flavor_entropy(par, t)});
      break;
    case Quantity::ccr:
      table.columns = {"t", "coherence", "predictability", "entropy", "residual"};
      for (double t : time_grid(t_max, cfg.steps)) {
        const CCRReport rep = ccr_pure(single_nu::build_state(par, t), flavor_pair);
        guard_residual(rep.residual);
        table.rows.push_back({t, rep.component("coherence"), rep.component("predictability"),
                              rep.component("entropy"), rep.residual});
      }
      break;
    case Quantity::spin_ccr_global:
      table.columns = {"t", "coherence", "predictability", "entropy", "residual"};
      for (double t : time_grid(t_max, cfg.steps)) {
        const CCRReport rep = ccr_pure(pair::evolve_pair_state(par, t), spin_pair);
        guard_residual(rep.residual);
        table.rows.push_back({t, rep.component("coherence"), rep.component("predictability"),
                              rep.component("entropy"), rep.residual});
      }
      break;
    case Quantity::spin_ccr_parties:
      table.columns = {"t",         "conditional_entropy", "predictability",
                       "coherence", "mutual_information",  "residual"};
      for (double t : time_grid(t_max, cfg.steps)) {
        const DensityMatrix rho_ss =
            partial_trace(density(pair::evolve_pair_state(par, t)), spin_pair);
        const CCRReport rep = ccr_mixed(rho_ss, {"nubar_spin"});
        guard_residual(rep.residual);
        table.rows.push_back({t, rep.component("conditional_entropy"),
                              rep.component("predictability"), rep.component("coherence"),
                              rep.component("mutual_information"), rep.residual});
      }
      break;
    default:
      throw usage_error("quantity does not define a time scan");
  }
  return table;
}

Table amplitude_table(const ScenarioConfig& cfg) {
  Table table;
  table.p_over_m1 = std::numeric_limits<double>::quiet_NaN();
  table.resolved_t_max = std::numeric_limits<double>::quiet_NaN();
  table.columns = {"p_over_m1", "amplitude"};
  for (double p : cfg.p_over_m1)
    table.rows.push_back({p, pair::entanglement_amplitude(params_for(cfg, p))});
  return table;
}

double parse_double(const std::string& key, const std::string& text) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto res = std::from_chars(begin, end, value);
  if (res.ec != std::errc{} || res.ptr != end)
    throw usage_error("config: bad numeric value for " + key + ": '" + text + "'");
  return value;
}

int parse_int(const std::string& key, const std::string& text) {
  int value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
    throw usage_error("config: bad integer value for " + key + ": '" + text + "'");
  return value;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

const char* model_name(Model m) { return m == Model::single ? "single" : "pair"; }

const char* quantity_name(Quantity q) {
  switch (q) {
    case Quantity::purity: return "purity";
    case Quantity::ccr: return "ccr";
    case Quantity::survival: return "survival";
    case Quantity::entropy: return "entropy";
    case Quantity::spin_ccr_global: return "spin-ccr-global";
    case Quantity::spin_ccr_parties: return "spin-ccr-parties";
    case Quantity::amplitude: return "amplitude";
  }
  return "?";
}

void validate(const ScenarioConfig& cfg) {
  if (cfg.p_over_m1.empty()) throw usage_error("at least one p_over_m1 value is required");
  for (double p : cfg.p_over_m1)
    if (!(p >= 0.0)) throw usage_error("p_over_m1 values must be >= 0");
  if (!(cfg.sin2_theta >= 0.0 && cfg.sin2_theta < 1.0))
    throw usage_error("sin2_theta must lie in [0, 1)");
  if (!(cfg.dm2_over_m1sq >= 0.0)) throw usage_error("dm2_over_m1sq must be >= 0");
  if (!(cfg.ml_over_m1 > 0.0)) throw usage_error("ml_over_m1 must be > 0");
  if (cfg.t_max && !(*cfg.t_max > 0.0)) throw usage_error("t_max must be > 0");
  if (cfg.steps < 2) throw usage_error("steps must be >= 2");
  if (cfg.precision < 1 || cfg.precision > 17)
    throw usage_error("precision must lie in [1, 17]");
  if (cfg.quantity != Quantity::amplitude && !cfg.t_max && cfg.dm2_over_m1sq == 0.0)
    throw usage_error("degenerate masses need an explicit t_max");

  const bool single_ok = cfg.quantity == Quantity::purity || cfg.quantity == Quantity::ccr ||
                         cfg.quantity == Quantity::survival ||
                         cfg.quantity == Quantity::entropy;
  const bool pair_ok = cfg.quantity == Quantity::purity ||
                       cfg.quantity == Quantity::spin_ccr_global ||
                       cfg.quantity == Quantity::spin_ccr_parties ||
                       cfg.quantity == Quantity::amplitude;
  if ((cfg.model == Model::single && !single_ok) || (cfg.model == Model::pair && !pair_ok))
    throw usage_error(std::string("quantity '") + quantity_name(cfg.quantity) +
                      "' is not defined for model '" + model_name(cfg.model) + "'");
}

std::vector<Table> run_scenario(const ScenarioConfig& cfg) {
  validate(cfg);
  std::vector<Table> tables;
  if (cfg.quantity == Quantity::amplitude) {
    tables.push_back(amplitude_table(cfg));
    return tables;
  }
  for (double p : cfg.p_over_m1) tables.push_back(scan_table(cfg, p));
  return tables;
}

std::map<std::string, std::string> parse_config_file(std::istream& in) {
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw usage_error("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) throw usage_error("config line " + std::to_string(lineno) + ": empty key");
    if (!kv.emplace(key, value).second)
      throw usage_error("config: repeated key " + key);
  }
  return kv;
}

void apply_config(ScenarioConfig& cfg, const std::map<std::string, std::string>& kv,
                  const std::set<std::string>& overridden) {
  for (const auto& [key, value] : kv) {
    if (overridden.contains(key)) continue;
    if (key == "p_over_m1") {
      std::vector<double> list;
      std::string item;
      std::istringstream ss(value);
      while (std::getline(ss, item, ',')) {
        const std::string v = trim(item);
        if (v.empty()) throw usage_error("config: empty entry in p_over_m1 list");
        list.push_back(parse_double(key, v));
      }
      if (list.empty()) throw usage_error("config: p_over_m1 list is empty");
      cfg.p_over_m1 = std::move(list);
    } else if (key == "sin2_theta") {
      cfg.sin2_theta = parse_double(key, value);
    } else if (key == "dm2_over_m1sq") {
      cfg.dm2_over_m1sq = parse_double(key, value);
    } else if (key == "ml_over_m1") {
      cfg.ml_over_m1 = parse_double(key, value);
    } else if (key == "t_max") {
      cfg.t_max = parse_double(key, value);
    } else if (key == "steps") {
      cfg.steps = parse_int(key, value);
    } else if (key == "out") {
      cfg.out_path = value;
    } else if (key == "precision") {
      cfg.precision = parse_int(key, value);
    } else {
      throw usage_error("config: unknown key '" + key + "'");
    }
  }
}

namespace {

struct SuiteAccumulator {
  std::vector<CheckResult> checks;

  void bound(const std::string& name, double value, double tol, bool gated = true) {
    checks.push_back({name, value, tol, "<=", gated, !gated || value <= tol});
  }
  void exceed(const std::string& name, double value, double floor) {
    checks.push_back({name, value, floor, ">", true, value > floor});
  }
  void report(const std::string& name, double value) {
    checks.push_back({name, value, 0.0, "", false, true});
  }
};

double max_abs_diff(const LabeledState& a, const LabeledState& b) {
  return (a.amp - b.amp).cwiseAbs().maxCoeff();
}

}  // namespace

VerifyReport run_verification(const std::vector<double>& p_list, double sin2_theta,
                              double dm2_over_m1sq, double ml_over_m1, int steps) {
  SuiteAccumulator acc;

  double ccr_single = 0.0, ccr_pair_global = 0.0, ccr_pair_parties = 0.0;
  double dens_dev = 0.0, pur_dev = 0.0, surv_dev = 0.0;
  double path_dev = 0.0, spin_dens_dev = 0.0, spin_pur_dev = 0.0;
  double spin_marginal_dev = 0.0, spin_diag_drift = 0.0;
  double alt_purity_dev = 0.0;
  std::vector<double> purity_deficits;

  for (double p : p_list) {
    const PhysParams par =
        PhysParams::from_ratios(p, sin2_theta, dm2_over_m1sq, ml_over_m1);
    const pair::PairCoefficients ab = pair::pair_amplitudes(par);
    double deficit = 0.0;
    for (double t : time_grid(par.default_t_max(), steps)) {
      const LabeledState single = single_nu::build_state(par, t);
      ccr_single = std::max(ccr_single,
                            std::abs(ccr_pure(single, flavor_pair).residual));

      const single_nu::FlavorDensity closed = single_nu::flavor_density_closed(par, t);
      const single_nu::FlavorDensity brute = single_nu::flavor_density_brute(par, t);
      dens_dev = std::max({dens_dev, std::abs(closed.rho11 - brute.rho11),
                           std::abs(closed.rho22 - brute.rho22),
                           std::abs(closed.rho12 - brute.rho12)});
      const DensityMatrix flavor_red = partial_trace(density(single), flavor_pair);
      pur_dev = std::max(pur_dev, std::abs(single_nu::flavor_purity_closed(par, t) -
                                           purity(flavor_red)));
      surv_dev = std::max(surv_dev,
                          std::abs(single_nu::survival_probability(par, t) - brute.rho11));
      deficit = std::max(deficit, 1.0 - single_nu::flavor_purity_closed(par, t));

      const DensityMatrix spin_marg = partial_trace(density(single), {"spin"});
      spin_marginal_dev = std::max(
          {spin_marginal_dev, std::abs(spin_marg.mat(0, 0)),
           std::abs(spin_marg.mat(1, 1) - 1.0), std::abs(spin_marg.mat(0, 1))});

      const LabeledState direct = pair::evolve_pair_state(par, t);
      path_dev = std::max(path_dev,
                          max_abs_diff(direct, pair::evolve_pair_state_gamma(par, t)));
      ccr_pair_global =
          std::max(ccr_pair_global, std::abs(ccr_pure(direct, spin_pair).residual));
      const DensityMatrix rho_ss = partial_trace(density(direct), spin_pair);
      ccr_pair_parties = std::max(
          ccr_pair_parties, std::abs(ccr_mixed(rho_ss, {"nubar_spin"}).residual));

      const pair::SpinDensity sd_closed = pair::spin_density_closed(par, t);
      const pair::SpinDensity sd_brute = pair::spin_density_brute(par, t);
      spin_dens_dev = std::max({spin_dens_dev, std::abs(sd_closed.pop_ud - sd_brute.pop_ud),
                                std::abs(sd_closed.pop_du - sd_brute.pop_du),
                                std::abs(sd_closed.rho12 - sd_brute.rho12)});
      spin_pur_dev =
          std::max(spin_pur_dev, std::abs(pair::spin_purity(par, t) - purity(rho_ss)));
      spin_diag_drift = std::max({spin_diag_drift, std::abs(sd_brute.pop_ud - ab.a * ab.a),
                                  std::abs(sd_brute.pop_du - ab.b * ab.b)});
      alt_purity_dev = std::max(
          alt_purity_dev, std::abs(pair::spin_purity_alt_form(par, t) - purity(rho_ss)));
    }
    purity_deficits.push_back(deficit);
  }

  acc.bound("single_ccr_flavor_residual", ccr_single, 1e-10);
  acc.bound("pair_ccr_spin_global_residual", ccr_pair_global, 1e-10);
  acc.bound("pair_ccr_spin_parties_residual", ccr_pair_parties, 1e-10);
  acc.bound("flavor_density_closed_vs_brute", dens_dev, 1e-12);
  acc.bound("flavor_purity_closed_vs_brute", pur_dev, 1e-12);
  acc.bound("survival_closed_vs_brute", surv_dev, 1e-12);
  acc.bound("pair_state_paths_agreement", path_dev, 1e-12);
  acc.bound("spin_density_closed_vs_brute", spin_dens_dev, 1e-12);
  acc.bound("spin_purity_closed_vs_brute", spin_pur_dev, 1e-12);
  acc.bound("single_spin_marginal_separable", spin_marginal_dev, 1e-12);
  acc.bound("pair_spin_diagonal_drift", spin_diag_drift, 1e-12);

  // Trend across the momentum grid: the oscillation amplitude of the flavor
  // purity must fall as p/m1 grows.
  if (purity_deficits.size() >= 2) {
    double margin = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i + 1 < purity_deficits.size(); ++i)
      margin = std::min(margin, purity_deficits[i] - purity_deficits[i + 1]);
    acc.exceed("flavor_purity_amplitude_decreasing", margin, 0.0);
  }

  {  // relativistic limit
    const PhysParams par =
        PhysParams::from_ratios(1e3, sin2_theta, dm2_over_m1sq, ml_over_m1);
    double dev = 0.0, deficit = 0.0;
    for (double t : time_grid(par.default_t_max(), steps)) {
      dev = std::max(dev, std::abs(single_nu::survival_probability(par, t) -
                                   single_nu::survival_probability_standard(par, t)));
      deficit = std::max(deficit, 1.0 - single_nu::flavor_purity_closed(par, t));
    }
    acc.bound("relativistic_survival_vs_standard", dev, 1e-3);
    acc.bound("relativistic_purity_deficit", deficit, 1e-3);
  }

  {  // non-relativistic limit
    const PhysParams par =
        PhysParams::from_ratios(1e-3, sin2_theta, dm2_over_m1sq, ml_over_m1);
    const double s2t = par.sin_2theta();
    double dev = 0.0;
    for (double t : time_grid(par.default_t_max(), steps)) {
      const double s = std::sin(par.delta_e() * t);
      dev = std::max(dev, std::abs(single_nu::flavor_purity_closed(par, t) -
                                   (1.0 - 0.5 * s2t * s2t * s * s)));
    }
    acc.bound("nonrelativistic_purity_vs_limit", dev, 1e-3);
  }

  {  // degenerate masses freeze the flavor sector
    const PhysParams par = PhysParams::from_ratios(1.0, sin2_theta, 0.0, ml_over_m1);
    double dev = 0.0;
    for (double t : time_grid(20.0 * std::numbers::pi / par.e2, steps)) {
      dev = std::max({dev, std::abs(single_nu::kernel_g(par, t)),
                      std::abs(single_nu::kernel_h(par, t)),
                      std::abs(1.0 - single_nu::survival_probability(par, t))});
    }
    acc.bound("degenerate_mass_flavor_freeze", dev, 1e-12);
  }

  {  // entropy dies off at large momentum
    const PhysParams par =
        PhysParams::from_ratios(10.0, sin2_theta, dm2_over_m1sq, ml_over_m1);
    double max_entropy = 0.0;
    for (double t : time_grid(par.default_t_max(), steps))
      max_entropy = std::max(max_entropy, single_nu::flavor_entropy(par, t));
    acc.bound("entropy_vanishes_at_large_p", max_entropy, 0.05);
  }

  {  // pair amplitude endpoints and monotonicity
    const PhysParams at_rest =
        PhysParams::from_ratios(0.0, sin2_theta, dm2_over_m1sq, ml_over_m1);
    acc.bound("amplitude_at_p0", std::abs(pair::entanglement_amplitude(at_rest) - 1.0),
              1e-12);

    const PhysParams deep =
        PhysParams::from_ratios(1e6, sin2_theta, dm2_over_m1sq, ml_over_m1);
    const double direct = pair::entanglement_amplitude(deep);
    const double limit = pair::amplitude_limit_large_p(deep);
    acc.bound("amplitude_asymptote_rel_error", std::abs(direct - limit) / limit, 1e-3);
    acc.report("amplitude_alt_limit_relative_deviation",
               std::abs(pair::amplitude_limit_alt_form(deep) - direct) / direct);

    double margin = std::numeric_limits<double>::infinity();
    double prev = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 30; ++i) {
      const double p = std::pow(10.0, 3.0 * i / 30.0);  // 1 .. 1e3
      const double amp = pair::entanglement_amplitude(
          PhysParams::from_ratios(p, sin2_theta, dm2_over_m1sq, ml_over_m1));
      if (i > 0) margin = std::min(margin, prev - amp);
      prev = amp;
    }
    acc.exceed("amplitude_monotone_decrease", margin, 0.0);
  }

  {  // measure sanity on random states
    std::mt19937 rng(20260810);
    std::normal_distribution<double> gauss;
    double pv_residual = 0.0, conc_dev = 0.0;
    for (int i = 0; i < 100; ++i) {
      Eigen::VectorXcd amp(4);
      for (int j = 0; j < 4; ++j) amp(j) = std::complex<double>(gauss(rng), gauss(rng));
      LabeledState state({"a", "b"}, amp);
      state.normalize();
      pv_residual = std::max(pv_residual, std::abs(qubit_pv(state, "a").residual));

      const double phi = std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng);
      const double x = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      const double a = std::sqrt(x), b = std::sqrt(1.0 - x);
      Eigen::VectorXcd amp2 = Eigen::VectorXcd::Zero(4);
      amp2(1) = a;
      amp2(2) = b * std::polar(1.0, phi);
      const LabeledState two({"a", "b"}, amp2);
      conc_dev = std::max(conc_dev, std::abs(concurrence(density(two)) - 2.0 * a * b));
    }
    acc.bound("qubit_ccr_random_states", pv_residual, 1e-10);
    acc.bound("concurrence_pure_formula", conc_dev, 1e-12);
  }

  {  // the path-comparison check must catch a corrupted branch sign
    const PhysParams par =
        PhysParams::from_ratios(1.0, sin2_theta, dm2_over_m1sq, ml_over_m1);
    const double t = par.default_t_max() / 3.0;
    pair::GammaSigns corrupt;
    corrupt.g3 = -1.0;
    acc.exceed("fault_injection_detected",
               max_abs_diff(pair::evolve_pair_state(par, t),
                            pair::evolve_pair_state_gamma(par, t, corrupt)),
               1e-2);
  }

  // Reconciliation of the alternative published purity forms (expected to
  // deviate; reported, not gated).
  acc.report("spin_purity_alt_form_deviation", alt_purity_dev);
  {
    const PhysParams par = PhysParams::from_ratios(1.0, 0.0, dm2_over_m1sq, ml_over_m1);
    double dev = 0.0;
    for (double t : time_grid(20.0 * std::numbers::pi / par.e2, steps))
      dev = std::max(dev, std::abs(pair::spin_purity_alt_form_nomixing(par, t) -
                                   pair::spin_purity(par, t)));
    acc.report("spin_purity_alt_form_nomixing_deviation", dev);
  }

  VerifyReport rep;
  rep.checks = std::move(acc.checks);
  rep.all_pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                             [](const CheckResult& c) { return c.pass; });
  return rep;
}

}  // namespace nuccr::scenario
