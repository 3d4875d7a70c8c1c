#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <set>
#include <string>

#include "nuccr/scenario.hpp"

namespace {

using nuccr::scenario::ScenarioConfig;

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct RawFlags {
  std::vector<double> p_over_m1;
  double sin2_theta = 0.306;
  double dm2_over_m1sq = 0.001;
  double ml_over_m1 = 10.0;
  double t_max = 0.0;
  int steps = 4000;
  std::string out;
  std::string config;
  int precision = 12;
};

void add_scenario_options(CLI::App* cmd, RawFlags& f) {
  cmd->add_option("--p-over-m1", f.p_over_m1, "momentum in units of m1 (repeat or comma-list)")
      ->delimiter(',');
  cmd->add_option("--sin2-theta", f.sin2_theta, "sin^2 of the mixing angle [default 0.306]");
  cmd->add_option("--dm2-over-m1sq", f.dm2_over_m1sq,
                  "m2^2 - m1^2 in units of m1^2 [default 0.001]");
  cmd->add_option("--ml-over-m1", f.ml_over_m1, "lepton mass in units of m1 [default 10]");
  cmd->add_option("--t-max", f.t_max, "time window in units of 1/m1 [default 4*pi/(E2-E1)]");
  cmd->add_option("--steps", f.steps, "number of samples per table [default 4000]");
  cmd->add_option("--out", f.out, "output path (stdout when omitted)");
  cmd->add_option("--config", f.config, "key = value config file; flags win on conflict");
  cmd->add_option("--precision", f.precision, "significant digits in output [default 12]");
}

// Which config-file keys were already fixed on the command line.
std::set<std::string> overridden_keys(const CLI::App* cmd) {
  static const std::pair<const char*, const char*> names[] = {
      {"--p-over-m1", "p_over_m1"},   {"--sin2-theta", "sin2_theta"},
      {"--dm2-over-m1sq", "dm2_over_m1sq"}, {"--ml-over-m1", "ml_over_m1"},
      {"--t-max", "t_max"},           {"--steps", "steps"},
      {"--out", "out"},               {"--precision", "precision"}};
  std::set<std::string> keys;
  for (const auto& [flag, key] : names)
    if (cmd->count(flag) > 0) keys.insert(key);
  return keys;
}

ScenarioConfig resolve_config(const CLI::App* cmd, const RawFlags& f,
                              nuccr::scenario::Model model,
                              nuccr::scenario::Quantity quantity) {
  ScenarioConfig cfg;
  cfg.model = model;
  cfg.quantity = quantity;

  if (!f.config.empty()) {
    std::ifstream in(f.config);
    if (!in) throw nuccr::scenario::usage_error("cannot read config file: " + f.config);
    nuccr::scenario::apply_config(cfg, nuccr::scenario::parse_config_file(in),
                                  overridden_keys(cmd));
  }
  if (cmd->count("--p-over-m1")) cfg.p_over_m1 = f.p_over_m1;
  if (cmd->count("--sin2-theta")) cfg.sin2_theta = f.sin2_theta;
  if (cmd->count("--dm2-over-m1sq")) cfg.dm2_over_m1sq = f.dm2_over_m1sq;
  if (cmd->count("--ml-over-m1")) cfg.ml_over_m1 = f.ml_over_m1;
  if (cmd->count("--t-max")) cfg.t_max = f.t_max;
  if (cmd->count("--steps")) cfg.steps = f.steps;
  if (cmd->count("--out")) cfg.out_path = f.out;
  if (cmd->count("--precision")) cfg.precision = f.precision;
  return cfg;
}

std::string format_double(double v, int precision) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, precision);
  return std::string(buf, res.ptr);
}

std::string output_path_for(const ScenarioConfig& cfg, const nuccr::scenario::Table& table,
                            bool multi) {
  if (!multi || std::isnan(table.p_over_m1)) return cfg.out_path;
  const std::filesystem::path base(cfg.out_path);
  const std::string suffix = "_p" + format_double(table.p_over_m1, 12);
  std::filesystem::path named = base;
  named.replace_filename(base.stem().string() + suffix + base.extension().string());
  return named.string();
}

void write_csv(std::ostream& os, const ScenarioConfig& cfg,
               const nuccr::scenario::Table& table) {
  os << "# nuccr " << model_name(cfg.model) << ' ' << quantity_name(cfg.quantity);
  if (!std::isnan(table.p_over_m1)) {
    os << "; t in units of 1/m1; p_over_m1=" << format_double(table.p_over_m1, cfg.precision)
       << "; t_max=" << format_double(table.resolved_t_max, cfg.precision);
  } else {
    os << "; p_over_m1 sweep";
  }
  os << "; sin2_theta=" << format_double(cfg.sin2_theta, cfg.precision)
     << "; dm2_over_m1sq=" << format_double(cfg.dm2_over_m1sq, cfg.precision);
  if (cfg.model == nuccr::scenario::Model::pair)
    os << "; ml_over_m1=" << format_double(cfg.ml_over_m1, cfg.precision);
  os << "\n";

  for (size_t i = 0; i < table.columns.size(); ++i)
    os << table.columns[i] << (i + 1 < table.columns.size() ? "," : "");
  os << "\n";
  for (const auto& row : table.rows) {
    for (size_t i = 0; i < row.size(); ++i)
      os << format_double(row[i], cfg.precision) << (i + 1 < row.size() ? "," : "");
    os << "\n";
  }
}

nlohmann::json config_json(const ScenarioConfig& cfg, const nuccr::scenario::Table& table,
                           const std::string& csv_path) {
  nlohmann::json j;
  j["model"] = model_name(cfg.model);
  j["quantity"] = quantity_name(cfg.quantity);
  j["p_over_m1"] = cfg.p_over_m1;
  j["sin2_theta"] = cfg.sin2_theta;
  j["dm2_over_m1sq"] = cfg.dm2_over_m1sq;
  j["ml_over_m1"] = cfg.ml_over_m1;
  j["steps"] = cfg.steps;
  j["precision"] = cfg.precision;
  j["csv"] = csv_path;
  if (!std::isnan(table.p_over_m1)) {
    j["file_p_over_m1"] = table.p_over_m1;
    j["t_max"] = table.resolved_t_max;
    j["time_unit"] = "1/m1";
  }
  return j;
}

int emit_tables(const ScenarioConfig& cfg, const std::vector<nuccr::scenario::Table>& tables) {
  const bool multi = tables.size() > 1;
  for (const auto& table : tables) {
    const std::string path = output_path_for(cfg, table, multi);
    if (path.empty()) {
      write_csv(std::cout, cfg, table);
      continue;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) {
      std::cerr << "nuccr: cannot open output file: " << path << "\n";
      return kExitIo;
    }
    write_csv(os, cfg, table);
    if (!os) {
      std::cerr << "nuccr: write failed: " << path << "\n";
      return kExitIo;
    }
    std::ofstream js(path + ".json", std::ios::binary);
    if (!js) {
      std::cerr << "nuccr: cannot open sidecar: " << path << ".json\n";
      return kExitIo;
    }
    js << config_json(cfg, table, path).dump(2) << "\n";
  }
  return kExitOk;
}

nlohmann::json verify_json(const nuccr::scenario::VerifyReport& rep) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : rep.checks) {
    nlohmann::json j;
    j["name"] = c.name;
    j["value"] = c.value;
    if (c.gated) {
      j["tolerance"] = c.tolerance;
      j["relation"] = c.relation;
      j["pass"] = c.pass;
    } else {
      j["informational"] = true;
    }
    checks.push_back(std::move(j));
  }
  return nlohmann::json{{"checks", std::move(checks)}, {"all_pass", rep.all_pass}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dirac-bispinor neutrino simulator: chirality/spin/flavor entanglement,"
               " complementarity budgets, and oscillation observables"};
  app.require_subcommand(1);

  RawFlags flags;
  using nuccr::scenario::Model;
  using nuccr::scenario::Quantity;

  CLI::App* single = app.add_subcommand("single", "single oscillating neutrino");
  single->require_subcommand(1);
  CLI::App* pair = app.add_subcommand("pair", "lepton-antineutrino pair");
  pair->require_subcommand(1);
  CLI::App* verify =
      app.add_subcommand("verify", "run the invariant and reconciliation suite");
  add_scenario_options(verify, flags);

  struct Leaf {
    CLI::App* cmd;
    Model model;
    Quantity quantity;
  };
  std::vector<Leaf> leaves;
  const auto add_leaf = [&](CLI::App* parent, const char* name, const char* help,
                            Model m, Quantity q) {
    CLI::App* cmd = parent->add_subcommand(name, help);
    add_scenario_options(cmd, flags);
    leaves.push_back({cmd, m, q});
  };
  add_leaf(single, "purity", "flavor-reduced purity vs time", Model::single,
           Quantity::purity);
  add_leaf(single, "ccr", "flavor-sector complementarity components vs time",
           Model::single, Quantity::ccr);
  add_leaf(single, "survival", "survival probability vs time (exact and standard)",
           Model::single, Quantity::survival);
  add_leaf(single, "entropy", "flavor entanglement entropy vs time", Model::single,
           Quantity::entropy);
  add_leaf(pair, "spin-ccr-global", "spin pair vs rest: pure-state components",
           Model::pair, Quantity::spin_ccr_global);
  add_leaf(pair, "spin-ccr-parties", "spin vs spin: mixed-state components", Model::pair,
           Quantity::spin_ccr_parties);
  add_leaf(pair, "purity", "spin-reduced purity vs time", Model::pair, Quantity::purity);
  add_leaf(pair, "amplitude", "spin oscillation amplitude vs momentum", Model::pair,
           Quantity::amplitude);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (verify->parsed()) {
      ScenarioConfig cfg;
      cfg.steps = 500;  // verify default: enough for maxima, fast to run
      cfg.model = Model::single;
      cfg.quantity = Quantity::ccr;
      if (!flags.config.empty()) {
        std::ifstream in(flags.config);
        if (!in)
          throw nuccr::scenario::usage_error("cannot read config file: " + flags.config);
        nuccr::scenario::apply_config(cfg, nuccr::scenario::parse_config_file(in),
                                      overridden_keys(verify));
      }
      if (verify->count("--p-over-m1")) cfg.p_over_m1 = flags.p_over_m1;
      if (verify->count("--sin2-theta")) cfg.sin2_theta = flags.sin2_theta;
      if (verify->count("--dm2-over-m1sq")) cfg.dm2_over_m1sq = flags.dm2_over_m1sq;
      if (verify->count("--ml-over-m1")) cfg.ml_over_m1 = flags.ml_over_m1;
      if (verify->count("--steps")) cfg.steps = flags.steps;
      if (verify->count("--out")) cfg.out_path = flags.out;
      nuccr::scenario::validate(cfg);

      const auto report = nuccr::scenario::run_verification(
          cfg.p_over_m1, cfg.sin2_theta, cfg.dm2_over_m1sq, cfg.ml_over_m1, cfg.steps);
      const std::string text = verify_json(report).dump(2) + "\n";
      if (cfg.out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream os(cfg.out_path, std::ios::binary);
        if (!os) {
          std::cerr << "nuccr: cannot open output file: " << cfg.out_path << "\n";
          return kExitIo;
        }
        os << text;
      }
      return report.all_pass ? kExitOk : kExitInvariant;
    }

    for (const auto& leaf : leaves) {
      if (!leaf.cmd->parsed()) continue;
      const ScenarioConfig cfg = resolve_config(leaf.cmd, flags, leaf.model, leaf.quantity);
      nuccr::scenario::validate(cfg);
      return emit_tables(cfg, nuccr::scenario::run_scenario(cfg));
    }
    std::cerr << "nuccr: no subcommand selected\n";
    return kExitUsage;
  } catch (const nuccr::scenario::usage_error& e) {
    std::cerr << "nuccr: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nuccr::scenario::invariant_error& e) {
    std::cerr << "nuccr: invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "nuccr: error: " << e.what() << "\n";
    return kExitInvariant;
  }
}
