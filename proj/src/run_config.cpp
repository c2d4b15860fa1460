#include "risplan/run_config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace risplan {

namespace {

const char* const sweep_whitelist[] = {"panel_side_mm", "theta_deg"};

PhaseBits phase_bits_from_json(const json& j, const std::string& field) {
  if (j.is_string()) {
    if (j.get<std::string>() == "continuous") return std::nullopt;
    throw ValidationError(field + ": expected an integer bit count or \"continuous\"");
  }
  if (!j.is_number_integer()) {
    throw ValidationError(field + ": expected an integer bit count or \"continuous\"");
  }
  const int bits = j.get<int>();
  if (bits < 1) throw ValidationError(field + ": bit count must be >= 1");
  return bits;
}

json phase_bits_to_json(PhaseBits bits) {
  return bits ? json(*bits) : json("continuous");
}

PlaneWaveDir plane_dir_from_json(const json& j, const std::string& field) {
  if (!j.is_object()) throw ValidationError(field + ": must be an object");
  PlaneWaveDir dir;
  if (j.contains("theta_deg")) dir.theta_deg = j.at("theta_deg").get<double>();
  if (j.contains("phi_deg")) dir.phi_deg = j.at("phi_deg").get<double>();
  return dir;
}

SteeringTarget target_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("target: must be an object");
  SteeringTarget t;
  if (j.contains("incident")) {
    const json& inc = j.at("incident");
    const std::string type = inc.contains("type") ? inc.at("type").get<std::string>() : "plane_wave";
    if (type == "plane_wave") {
      t.incident = plane_dir_from_json(inc, "target.incident");
    } else if (type == "point_source") {
      PointSource src;
      if (inc.contains("x_m")) src.x_m = inc.at("x_m").get<double>();
      if (inc.contains("y_m")) src.y_m = inc.at("y_m").get<double>();
      if (!inc.contains("z_m")) throw ValidationError("target.incident.z_m: missing required field");
      src.z_m = inc.at("z_m").get<double>();
      t.incident = src;
    } else {
      throw ValidationError("target.incident.type: expected \"plane_wave\" or \"point_source\"");
    }
  }
  if (!j.contains("outgoing")) throw ValidationError("target.outgoing: missing required field");
  t.outgoing = plane_dir_from_json(j.at("outgoing"), "target.outgoing");
  return t;
}

json target_to_json(const SteeringTarget& t) {
  json j;
  if (const auto* pw = std::get_if<PlaneWaveDir>(&t.incident)) {
    j["incident"] = {{"type", "plane_wave"},
                     {"theta_deg", round_sig9(pw->theta_deg)},
                     {"phi_deg", round_sig9(pw->phi_deg)}};
  } else {
    const auto& src = std::get<PointSource>(t.incident);
    j["incident"] = {{"type", "point_source"},
                     {"x_m", round_sig9(src.x_m)},
                     {"y_m", round_sig9(src.y_m)},
                     {"z_m", round_sig9(src.z_m)}};
  }
  j["outgoing"] = {{"theta_deg", round_sig9(t.outgoing.theta_deg)},
                   {"phi_deg", round_sig9(t.outgoing.phi_deg)}};
  return j;
}

}  // namespace

std::vector<double> SweepSpec::values() const {
  std::vector<double> v;
  v.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    v.push_back(start + (stop - start) * i / (steps - 1));
  }
  return v;
}

std::vector<double> ThetaGridSpec::to_grid() const {
  std::vector<double> grid;
  grid.reserve(count);
  if (count == 1) {
    grid.push_back(start_deg);
    return grid;
  }
  for (int i = 0; i < count; ++i) {
    grid.push_back(start_deg + (stop_deg - start_deg) * i / (count - 1));
  }
  return grid;
}

ApertureDesign resolve_aperture(const ApertureConfig& cfg, PhaseBits bits) {
  if (!(cfg.design_frequency.hz > 0.0)) {
    throw ValidationError("aperture.design_frequency_ghz: must be positive");
  }
  if (cfg.cells_per_side && cfg.panel_side_m) {
    throw ValidationError("aperture: give either panel_side_mm or cells_per_side, not both");
  }
  if (cfg.cells_per_side) {
    if (*cfg.cells_per_side < 1) throw ValidationError("aperture.cells_per_side: must be >= 1");
    const double spacing = cfg.cell_spacing_m ? *cfg.cell_spacing_m
                                              : 0.5 * wavelength_m(cfg.design_frequency);
    if (!(spacing > 0.0)) throw ValidationError("aperture.cell_spacing_mm: must be positive");
    return ApertureDesign{cfg.design_frequency, *cfg.cells_per_side, spacing, bits};
  }
  if (!cfg.panel_side_m) {
    throw ValidationError("aperture: panel_side_mm or cells_per_side is required");
  }
  ApertureDesign grid = build_grid(*cfg.panel_side_m, cfg.design_frequency, bits);
  if (cfg.cell_spacing_m) {
    if (!(*cfg.cell_spacing_m > 0.0)) throw ValidationError("aperture.cell_spacing_mm: must be positive");
    grid.cell_spacing_m = *cfg.cell_spacing_m;
  }
  return grid;
}

RunConfig run_config_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("config: must be a JSON object");
  RunConfig cfg;
  if (j.contains("schema")) cfg.schema_version = j.at("schema").get<std::string>();

  if (j.contains("scenario")) cfg.scenario = scenario_from_json(j.at("scenario"));

  if (j.contains("theta_max_deg")) {
    const json& thetas = j.at("theta_max_deg");
    if (thetas.is_array()) {
      for (const auto& v : thetas) cfg.theta_max_deg.push_back(v.get<double>());
    } else if (thetas.is_number()) {
      cfg.theta_max_deg.push_back(thetas.get<double>());
    } else {
      throw ValidationError("theta_max_deg: must be a number or an array of numbers");
    }
  }

  if (j.contains("bandwidth_method")) {
    cfg.bandwidth_method = bandwidth_method_from_string(j.at("bandwidth_method").get<std::string>());
  }

  if (j.contains("sweep")) {
    const json& sw = j.at("sweep");
    if (!sw.is_object()) throw ValidationError("sweep: must be an object");
    SweepSpec spec;
    if (!sw.contains("parameter")) throw ValidationError("sweep.parameter: missing required field");
    spec.parameter = sw.at("parameter").get<std::string>();
    bool known = false;
    for (const char* name : sweep_whitelist) known = known || spec.parameter == name;
    if (!known) {
      throw ValidationError("sweep.parameter: unknown axis \"" + spec.parameter +
                            "\" (supported: panel_side_mm, theta_deg)");
    }
    if (!sw.contains("start") || !sw.contains("stop")) {
      throw ValidationError("sweep.start/stop: missing required field");
    }
    spec.start = sw.at("start").get<double>();
    spec.stop = sw.at("stop").get<double>();
    if (!sw.contains("steps")) throw ValidationError("sweep.steps: missing required field");
    spec.steps = sw.at("steps").get<int>();
    if (spec.steps < 2) throw ValidationError("sweep.steps: must be >= 2");
    cfg.sweep = spec;
  }

  if (j.contains("aperture")) {
    const json& ap = j.at("aperture");
    if (!ap.is_object()) throw ValidationError("aperture: must be an object");
    ApertureConfig a;
    if (ap.contains("panel_side_mm")) a.panel_side_m = ap.at("panel_side_mm").get<double>() / 1e3;
    if (ap.contains("cells_per_side")) a.cells_per_side = ap.at("cells_per_side").get<int>();
    if (!ap.contains("design_frequency_ghz")) {
      throw ValidationError("aperture.design_frequency_ghz: missing required field");
    }
    a.design_frequency = Frequency::from_ghz(ap.at("design_frequency_ghz").get<double>());
    if (ap.contains("cell_spacing_mm")) a.cell_spacing_m = ap.at("cell_spacing_mm").get<double>() / 1e3;
    cfg.aperture = a;
  }

  if (j.contains("target")) cfg.target = target_from_json(j.at("target"));

  if (j.contains("quantizations")) {
    const json& q = j.at("quantizations");
    if (!q.is_array()) throw ValidationError("quantizations: must be an array");
    for (const auto& v : q) cfg.quantizations.push_back(phase_bits_from_json(v, "quantizations[]"));
  }

  if (j.contains("theta_grid")) {
    const json& g = j.at("theta_grid");
    if (!g.is_object()) throw ValidationError("theta_grid: must be an object");
    ThetaGridSpec grid;
    grid.start_deg = g.value("start_deg", 0.0);
    grid.stop_deg = g.value("stop_deg", 0.0);
    if (!g.contains("count")) throw ValidationError("theta_grid.count: missing required field");
    grid.count = g.at("count").get<int>();
    if (grid.count < 1) throw ValidationError("theta_grid.count: must be >= 1 (empty angle grid)");
    if (grid.count > 1 && !(grid.stop_deg > grid.start_deg)) {
      throw ValidationError("theta_grid: stop_deg must exceed start_deg");
    }
    cfg.theta_grid = grid;
  }

  if (j.contains("eval_frequencies_ghz")) {
    const json& fs = j.at("eval_frequencies_ghz");
    if (!fs.is_array()) throw ValidationError("eval_frequencies_ghz: must be an array");
    for (const auto& v : fs) cfg.eval_frequencies_hz.push_back(v.get<double>() * 1e9);
  }

  if (j.contains("frequency_ghz")) {
    cfg.frequency = Frequency::from_ghz(j.at("frequency_ghz").get<double>());
  }
  if (j.contains("theta_deg")) cfg.squint_theta_deg = j.at("theta_deg").get<double>();
  if (j.contains("panel_side_mm")) cfg.squint_panel_side_m = j.at("panel_side_mm").get<double>() / 1e3;
  if (j.contains("phase_bits")) {
    cfg.squint_phase_bits = phase_bits_from_json(j.at("phase_bits"), "phase_bits");
  }

  if (j.contains("switch_count")) {
    const std::int64_t count = j.at("switch_count").get<std::int64_t>();
    if (count < 0) throw ValidationError("switch_count: must be >= 0");
    cfg.switch_count = count;
  }
  if (j.contains("on_fraction")) {
    cfg.on_fraction = j.at("on_fraction").get<double>();
    if (!(cfg.on_fraction >= 0.0 && cfg.on_fraction <= 1.0)) {
      throw ValidationError("on_fraction: must be in [0, 1]");
    }
  }
  if (j.contains("catalog")) cfg.catalog_path = j.at("catalog").get<std::string>();

  if (j.contains("output")) {
    const json& out = j.at("output");
    if (!out.is_object()) throw ValidationError("output: must be an object");
    if (out.contains("path")) cfg.output.path = out.at("path").get<std::string>();
    if (out.contains("format")) {
      const std::string fmt = out.at("format").get<std::string>();
      if (fmt == "json") {
        cfg.output.format = OutputFormat::json;
      } else if (fmt == "csv") {
        cfg.output.format = OutputFormat::csv;
      } else {
        throw ValidationError("output.format: expected \"json\" or \"csv\"");
      }
    }
  }
  return cfg;
}

json run_config_to_json(const RunConfig& cfg) {
  json j;
  j["schema"] = cfg.schema_version;
  if (cfg.scenario) j["scenario"] = scenario_to_json(*cfg.scenario);
  if (!cfg.theta_max_deg.empty()) {
    json thetas = json::array();
    for (double v : cfg.theta_max_deg) thetas.push_back(round_sig9(v));
    j["theta_max_deg"] = thetas;
  }
  j["bandwidth_method"] = to_string(cfg.bandwidth_method);
  if (cfg.sweep) {
    j["sweep"] = {{"parameter", cfg.sweep->parameter},
                  {"start", round_sig9(cfg.sweep->start)},
                  {"stop", round_sig9(cfg.sweep->stop)},
                  {"steps", cfg.sweep->steps}};
  }
  if (cfg.aperture) {
    json ap;
    if (cfg.aperture->panel_side_m) ap["panel_side_mm"] = round_sig9(*cfg.aperture->panel_side_m * 1e3);
    if (cfg.aperture->cells_per_side) ap["cells_per_side"] = *cfg.aperture->cells_per_side;
    ap["design_frequency_ghz"] = round_sig9(cfg.aperture->design_frequency.ghz());
    if (cfg.aperture->cell_spacing_m) ap["cell_spacing_mm"] = round_sig9(*cfg.aperture->cell_spacing_m * 1e3);
    j["aperture"] = ap;
  }
  if (cfg.target) j["target"] = target_to_json(*cfg.target);
  if (!cfg.quantizations.empty()) {
    json q = json::array();
    for (PhaseBits bits : cfg.quantizations) q.push_back(phase_bits_to_json(bits));
    j["quantizations"] = q;
  }
  if (cfg.theta_grid) {
    j["theta_grid"] = {{"start_deg", round_sig9(cfg.theta_grid->start_deg)},
                       {"stop_deg", round_sig9(cfg.theta_grid->stop_deg)},
                       {"count", cfg.theta_grid->count}};
  }
  if (!cfg.eval_frequencies_hz.empty()) {
    json fs = json::array();
    for (double f : cfg.eval_frequencies_hz) fs.push_back(round_sig9(f / 1e9));
    j["eval_frequencies_ghz"] = fs;
  }
  if (cfg.frequency) j["frequency_ghz"] = round_sig9(cfg.frequency->ghz());
  if (cfg.squint_theta_deg) j["theta_deg"] = round_sig9(*cfg.squint_theta_deg);
  if (cfg.squint_panel_side_m) j["panel_side_mm"] = round_sig9(*cfg.squint_panel_side_m * 1e3);
  if (cfg.squint_phase_bits) j["phase_bits"] = phase_bits_to_json(cfg.squint_phase_bits);
  if (cfg.switch_count) j["switch_count"] = *cfg.switch_count;
  if (cfg.on_fraction != 1.0) j["on_fraction"] = round_sig9(cfg.on_fraction);
  if (cfg.catalog_path) j["catalog"] = *cfg.catalog_path;
  json out;
  if (cfg.output.path) out["path"] = *cfg.output.path;
  out["format"] = cfg.output.format == OutputFormat::json ? "json" : "csv";
  j["output"] = out;
  return j;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("config: cannot open \"" + path + "\"");
  std::stringstream buffer;
  buffer << in.rdbuf();
  json j;
  try {
    j = json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("config \"" + path + "\": invalid JSON: " + e.what());
  }
  return run_config_from_json(j);
}

}  // namespace risplan
