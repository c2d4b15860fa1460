// risplan: sizes reflective panels for wireless scenarios, bounds their
// bandwidth/SNR/capacity, simulates aperture patterns, and projects switch
// power budgets. Subcommands: report, pattern, squint, power, techs.

#include "risplan/aperture.hpp"
#include "risplan/json_io.hpp"
#include "risplan/link_budget.hpp"
#include "risplan/run_config.hpp"
#include "risplan/switch_catalog.hpp"
#include "risplan/units.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using risplan::json;

bool log_enabled() {
  const char* level = std::getenv("RISPLAN_LOG");
  return level != nullptr && std::string(level) == "debug";
}

void log_debug(const std::string& msg) {
  if (log_enabled()) std::cerr << "risplan: " << msg << "\n";
}

std::string sig9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

void write_text(const std::optional<std::string>& path, const std::string& text) {
  if (!path) {
    std::cout << text;
    return;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) throw risplan::ValidationError("output.path: cannot write \"" + *path + "\"");
  out << text;
}

std::string bits_label(risplan::PhaseBits bits) {
  return bits ? std::to_string(*bits) + "bit" : "continuous";
}

struct CommonArgs {
  std::string config_path;
  std::string out_path;
  std::string format;
  std::string bandwidth_method;
  std::string catalog_path;
};

risplan::RunConfig load_with_overrides(const CommonArgs& args, bool config_required = true) {
  risplan::RunConfig cfg;
  if (!args.config_path.empty()) {
    cfg = risplan::load_run_config(args.config_path);
  } else if (config_required) {
    throw risplan::ValidationError("config: --config <path> is required");
  }
  if (!args.out_path.empty()) cfg.output.path = args.out_path;
  if (!args.format.empty()) {
    if (args.format == "json") {
      cfg.output.format = risplan::OutputFormat::json;
    } else if (args.format == "csv") {
      cfg.output.format = risplan::OutputFormat::csv;
    } else {
      throw risplan::ValidationError("--format: expected json or csv");
    }
  }
  if (!args.bandwidth_method.empty()) {
    cfg.bandwidth_method = risplan::bandwidth_method_from_string(args.bandwidth_method);
  }
  if (!args.catalog_path.empty()) cfg.catalog_path = args.catalog_path;
  return cfg;
}

std::vector<risplan::SwitchTechnology> resolve_catalog(const risplan::RunConfig& cfg) {
  std::vector<risplan::SwitchTechnology> catalog = risplan::builtin_catalog();
  if (cfg.catalog_path) {
    std::ifstream in(*cfg.catalog_path);
    if (!in) throw risplan::ValidationError("catalog: cannot open \"" + *cfg.catalog_path + "\"");
    std::stringstream buffer;
    buffer << in.rdbuf();
    json user;
    try {
      user = json::parse(buffer.str());
    } catch (const nlohmann::json::parse_error& e) {
      throw risplan::ValidationError("catalog \"" + *cfg.catalog_path + "\": invalid JSON: " + e.what());
    }
    catalog = risplan::merge_catalogs(catalog, risplan::catalog_from_json(user));
  }
  return catalog;
}

int cmd_report(const CommonArgs& args) {
  risplan::RunConfig cfg = load_with_overrides(args);
  if (!cfg.scenario) throw risplan::ValidationError("scenario: missing required section");
  if (cfg.theta_max_deg.empty()) {
    throw risplan::ValidationError("theta_max_deg: at least one steering angle is required");
  }

  json reports = json::array();
  std::string csv = "theta_max_deg,panel_side_mm,cells_per_side,switch_count,"
                    "max_bandwidth_3db_ghz,snr_db,capacity_gbps,bandwidth_method\n";
  for (double theta : cfg.theta_max_deg) {
    risplan::ScenarioSpec s = *cfg.scenario;
    s.theta_max_deg = theta;
    s.validate();
    log_debug("evaluating scenario at theta_max " + sig9(theta) + " deg");
    const risplan::RisRequirementsReport r = risplan::evaluate_scenario(s, cfg.bandwidth_method);
    reports.push_back(risplan::report_to_json(r, s));
    csv += sig9(theta) + "," + sig9(r.panel_side_m * 1e3) + "," + std::to_string(r.cells_per_side) +
           "," + std::to_string(r.switch_count) + "," + sig9(r.max_bandwidth_3db_hz * 1e-9) + "," +
           sig9(r.snr_db) + "," + sig9(r.capacity_bps * 1e-9) + "," +
           risplan::to_string(r.bandwidth_method) + "\n";
  }

  if (cfg.output.format == risplan::OutputFormat::csv) {
    write_text(cfg.output.path, csv);
  } else {
    write_text(cfg.output.path, reports.dump(2) + "\n");
  }
  return 0;
}

int cmd_pattern(const CommonArgs& args) {
  risplan::RunConfig cfg = load_with_overrides(args);
  if (!cfg.aperture) throw risplan::ValidationError("aperture: missing required section");
  if (!cfg.target) throw risplan::ValidationError("target: missing required section");
  if (!cfg.theta_grid) throw risplan::ValidationError("theta_grid: missing required section");

  std::vector<risplan::PhaseBits> quantizations = cfg.quantizations;
  if (quantizations.empty()) quantizations.push_back(std::nullopt);

  std::vector<double> freqs = cfg.eval_frequencies_hz;
  if (freqs.empty()) freqs.push_back(cfg.aperture->design_frequency.hz);

  const std::vector<double> grid = cfg.theta_grid->to_grid();
  const bool multiple = quantizations.size() * freqs.size() > 1;
  if (multiple && !cfg.output.path) {
    throw risplan::ValidationError(
        "output.path: required when more than one pattern file is produced");
  }
  std::string prefix;
  if (cfg.output.path) {
    prefix = *cfg.output.path;
    if (prefix.size() > 4 && prefix.substr(prefix.size() - 4) == ".csv") {
      prefix = prefix.substr(0, prefix.size() - 4);
    }
  }

  const risplan::ApertureDesign base = risplan::resolve_aperture(*cfg.aperture, std::nullopt);
  const risplan::PhaseProfile continuous = risplan::synthesize_profile(base, *cfg.target);

  for (risplan::PhaseBits bits : quantizations) {
    risplan::PhaseProfile profile = continuous;
    if (bits) profile = risplan::quantize_profile(continuous, *bits);
    for (double f_hz : freqs) {
      log_debug("pattern " + bits_label(bits) + " at " + sig9(f_hz * 1e-9) + " GHz");
      const risplan::RadiationPattern pattern =
          risplan::radiation_pattern(base, profile, risplan::Frequency{f_hz}, *cfg.target, grid);
      std::ostringstream body;
      risplan::write_pattern_csv(body, pattern);
      if (!cfg.output.path) {
        write_text(std::nullopt, body.str());
      } else if (!multiple) {
        write_text(*cfg.output.path, body.str());
      } else {
        std::string name = prefix + "_" + bits_label(bits);
        if (freqs.size() > 1) name += "_" + sig9(f_hz * 1e-9) + "GHz";
        write_text(name + ".csv", body.str());
      }
    }
  }
  return 0;
}

int cmd_squint(const CommonArgs& args) {
  risplan::RunConfig cfg = load_with_overrides(args);
  if (!cfg.sweep) throw risplan::ValidationError("sweep: missing required section");
  if (!cfg.frequency) throw risplan::ValidationError("frequency_ghz: missing required field");
  const risplan::Frequency f0 = *cfg.frequency;

  const bool side_sweep = cfg.sweep->parameter == "panel_side_mm";
  if (side_sweep && !cfg.squint_theta_deg) {
    throw risplan::ValidationError("theta_deg: required for a panel_side_mm sweep");
  }
  if (!side_sweep && !cfg.squint_panel_side_m) {
    throw risplan::ValidationError("panel_side_mm: required for a theta_deg sweep");
  }

  const std::string axis = cfg.sweep->parameter;
  std::string csv = axis + ",numeric_bandwidth_ghz,analytic_bandwidth_ghz\n";
  json rows = json::array();
  for (double value : cfg.sweep->values()) {
    const double side_m = side_sweep ? value * 1e-3 : *cfg.squint_panel_side_m;
    const double theta = side_sweep ? *cfg.squint_theta_deg : value;
    risplan::ApertureDesign grid = risplan::build_grid(side_m, f0, cfg.squint_phase_bits);
    risplan::SteeringTarget target;
    target.outgoing = risplan::PlaneWaveDir{theta, 0.0};
    log_debug("squint at " + axis + " = " + sig9(value));
    const auto numeric = risplan::squint_bandwidth_numeric(grid, target, f0);
    const double analytic = risplan::squint_bandwidth_analytic(side_m, theta, f0);

    csv += sig9(value) + "," + (numeric ? sig9(*numeric * 1e-9) : "inf") + "," +
           sig9(analytic * 1e-9) + "\n";
    json row;
    row[axis] = risplan::round_sig9(value);
    row["numeric_bandwidth_ghz"] = numeric ? json(risplan::round_sig9(*numeric / 1e9)) : json(nullptr);
    row["analytic_bandwidth_ghz"] = risplan::round_sig9(analytic / 1e9);
    rows.push_back(std::move(row));
  }

  if (cfg.output.format == risplan::OutputFormat::json) {
    write_text(cfg.output.path, rows.dump(2) + "\n");
  } else {
    write_text(cfg.output.path, csv);
  }
  return 0;
}

int cmd_power(const CommonArgs& args) {
  risplan::RunConfig cfg = load_with_overrides(args);
  std::int64_t count = 0;
  if (cfg.switch_count) {
    count = *cfg.switch_count;
  } else if (cfg.scenario) {
    risplan::ScenarioSpec s = *cfg.scenario;
    if (!cfg.theta_max_deg.empty()) s.theta_max_deg = cfg.theta_max_deg.front();
    s.validate();
    const double side = risplan::required_panel_side_m(s);
    const risplan::ApertureDesign grid = risplan::build_grid(side, s.frequency, s.phase_bits);
    count = risplan::switch_count(grid.cells_per_side, s.phase_bits, s.switches_per_bit);
    log_debug("derived switch count " + std::to_string(count) + " from scenario");
  } else {
    throw risplan::ValidationError("switch_count: give switch_count or a scenario to derive it from");
  }

  const json table = risplan::power_table_json(count, resolve_catalog(cfg), cfg.on_fraction);
  write_text(cfg.output.path, table.dump(2) + "\n");
  return 0;
}

int cmd_techs(const CommonArgs& args) {
  risplan::RunConfig cfg = load_with_overrides(args, /*config_required=*/false);
  const json table = risplan::techs_table_json(resolve_catalog(cfg));
  write_text(cfg.output.path, table.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"RIS scenario planning and aperture simulation toolkit"};
  app.require_subcommand(1);

  CommonArgs args;
  auto add_common = [&args](CLI::App* sub, bool with_bandwidth) {
    sub->add_option("--config", args.config_path, "JSON config file");
    sub->add_option("--out", args.out_path, "output path (stdout when omitted)");
    sub->add_option("--format", args.format, "output format: json or csv");
    if (with_bandwidth) {
      sub->add_option("--bandwidth-method", args.bandwidth_method,
                      "squint bandwidth method: numeric or analytic");
    }
  };

  CLI::App* report = app.add_subcommand("report", "scenario requirements and performance bounds");
  add_common(report, true);
  CLI::App* pattern = app.add_subcommand("pattern", "aperture pattern cuts as CSV");
  add_common(pattern, false);
  CLI::App* squint = app.add_subcommand("squint", "squint-limited bandwidth sweeps");
  add_common(squint, false);
  CLI::App* power = app.add_subcommand("power", "per-technology power and energy for a panel");
  add_common(power, false);
  power->add_option("--catalog", args.catalog_path, "user switch-technology catalog (merged by name)");
  CLI::App* techs = app.add_subcommand("techs", "dump the switch-technology catalog");
  add_common(techs, false);
  techs->add_option("--catalog", args.catalog_path, "user switch-technology catalog (merged by name)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (report->parsed()) return cmd_report(args);
    if (pattern->parsed()) return cmd_pattern(args);
    if (squint->parsed()) return cmd_squint(args);
    if (power->parsed()) return cmd_power(args);
    if (techs->parsed()) return cmd_techs(args);
  } catch (const risplan::SolverError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: invalid config: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
