#include "risplan/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace risplan {

double round_sig9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return std::strtod(buf, nullptr);
}

namespace {

double get_number(const json& j, const std::string& key, const std::string& scope) {
  if (!j.contains(key)) throw ValidationError(scope + "." + key + ": missing required field");
  if (!j.at(key).is_number()) throw ValidationError(scope + "." + key + ": must be a number");
  return j.at(key).get<double>();
}

double get_number_or(const json& j, const std::string& key, const std::string& scope, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number()) throw ValidationError(scope + "." + key + ": must be a number");
  return j.at(key).get<double>();
}

int get_int_or(const json& j, const std::string& key, const std::string& scope, int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number_integer()) throw ValidationError(scope + "." + key + ": must be an integer");
  return j.at(key).get<int>();
}

json range_to_json(const ValueRange& r, double unit) {
  return json{{"min", round_sig9(r.lo / unit)}, {"max", round_sig9(r.hi / unit)}};
}

ValueRange range_from_json(const json& j, const std::string& field, double unit) {
  if (!j.is_object() || !j.contains("min") || !j.contains("max")) {
    throw ValidationError(field + ": expected an object with min and max");
  }
  ValueRange r{j.at("min").get<double>() * unit, j.at("max").get<double>() * unit};
  if (!(r.lo <= r.hi)) throw ValidationError(field + ": min must not exceed max");
  return r;
}

}  // namespace

const char* to_string(BandwidthMethod method) {
  return method == BandwidthMethod::numeric ? "numeric" : "analytic";
}

BandwidthMethod bandwidth_method_from_string(const std::string& name) {
  if (name == "numeric") return BandwidthMethod::numeric;
  if (name == "analytic") return BandwidthMethod::analytic;
  throw ValidationError("bandwidth_method: expected \"numeric\" or \"analytic\", got \"" + name + "\"");
}

json scenario_to_json(const ScenarioSpec& s) {
  json j;
  j["frequency_ghz"] = round_sig9(s.frequency.ghz());
  j["d1_m"] = round_sig9(s.d1_m);
  j["d2_m"] = round_sig9(s.d2_m);
  j["total_antenna_gain_dbi"] = round_sig9(s.total_antenna_gain_dbi);
  j["radiated_power_dbm"] = round_sig9(s.radiated_power_dbm);
  j["noise_density_dbm_hz"] = round_sig9(s.noise.density_dbm_hz);
  j["noise_figure_db"] = round_sig9(s.noise.noise_figure_db);
  j["target_received_power_dbm"] = round_sig9(s.target_received_power_dbm);
  j["reference_bandwidth_ghz"] = round_sig9(s.reference_bandwidth_hz / 1e9);
  j["phase_bits"] = s.phase_bits;
  j["switches_per_bit"] = s.switches_per_bit;
  j["aperture_efficiency"] = round_sig9(s.aperture_efficiency);
  j["theta_max_deg"] = round_sig9(s.theta_max_deg);
  j["rcs_cos_exponent"] = round_sig9(s.rcs.cos_exponent);
  j["rcs_eta_placement"] = s.rcs.eta_placement == EtaPlacement::on_power ? "on_power" : "on_area";
  j["squint_beta"] = round_sig9(s.squint_beta);
  return j;
}

ScenarioSpec scenario_from_json(const json& j) {
  const std::string scope = "scenario";
  if (!j.is_object()) throw ValidationError(scope + ": must be an object");
  ScenarioSpec s;
  s.frequency = Frequency::from_ghz(get_number(j, "frequency_ghz", scope));
  if (j.contains("range_m")) {
    if (j.contains("d1_m") || j.contains("d2_m")) {
      throw ValidationError(scope + ".range_m: give either range_m or d1_m/d2_m, not both");
    }
    const double range = get_number(j, "range_m", scope);
    s.d1_m = range / 2.0;
    s.d2_m = range / 2.0;
  } else {
    s.d1_m = get_number(j, "d1_m", scope);
    s.d2_m = get_number(j, "d2_m", scope);
  }
  s.total_antenna_gain_dbi = get_number(j, "total_antenna_gain_dbi", scope);
  s.radiated_power_dbm = get_number(j, "radiated_power_dbm", scope);
  s.noise.density_dbm_hz = get_number(j, "noise_density_dbm_hz", scope);
  s.noise.noise_figure_db = get_number(j, "noise_figure_db", scope);
  s.target_received_power_dbm = get_number(j, "target_received_power_dbm", scope);
  s.reference_bandwidth_hz = get_number(j, "reference_bandwidth_ghz", scope) * 1e9;
  s.phase_bits = get_int_or(j, "phase_bits", scope, 2);
  s.switches_per_bit = get_int_or(j, "switches_per_bit", scope, 2);
  s.aperture_efficiency = get_number_or(j, "aperture_efficiency", scope, 0.25);
  s.theta_max_deg = get_number_or(j, "theta_max_deg", scope, 0.0);
  s.rcs.cos_exponent = get_number_or(j, "rcs_cos_exponent", scope, 1.0);
  if (j.contains("rcs_eta_placement")) {
    const std::string placement = j.at("rcs_eta_placement").get<std::string>();
    if (placement == "on_power") {
      s.rcs.eta_placement = EtaPlacement::on_power;
    } else if (placement == "on_area") {
      s.rcs.eta_placement = EtaPlacement::on_area;
    } else {
      throw ValidationError(scope + ".rcs_eta_placement: expected \"on_power\" or \"on_area\"");
    }
  }
  s.squint_beta = get_number_or(j, "squint_beta", scope, default_squint_beta);
  return s;
}

json report_to_json(const RisRequirementsReport& report, const ScenarioSpec& scenario) {
  json j;
  j["panel_side_mm"] = round_sig9(report.panel_side_m * 1e3);
  j["cells_per_side"] = report.cells_per_side;
  j["switch_count"] = report.switch_count;
  j["max_bandwidth_3db_ghz"] = round_sig9(report.max_bandwidth_3db_hz / 1e9);
  j["snr_db"] = round_sig9(report.snr_db);
  j["capacity_gbps"] = round_sig9(report.capacity_bps / 1e9);
  j["bandwidth_method"] = to_string(report.bandwidth_method);
  j["scenario"] = scenario_to_json(scenario);
  return j;
}

json catalog_to_json(const std::vector<SwitchTechnology>& catalog) {
  json arr = json::array();
  for (const auto& t : catalog) {
    json j;
    j["name"] = t.name;
    j["max_demonstrated_freq_ghz"] = round_sig9(t.max_demonstrated_freq_hz / 1e9);
    j["ron_coff_fs"] = t.ron_coff_s ? range_to_json(*t.ron_coff_s, 1e-15) : json(nullptr);
    j["ron_coff_note"] = t.ron_coff_note;
    j["dc_dissipation_mw"] = range_to_json(t.dc_dissipation_w, 1e-3);
    j["switching_energy_nj"] =
        t.switching_energy_j ? range_to_json(*t.switching_energy_j, 1e-9) : json(nullptr);
    j["switching_energy_note"] = t.switching_energy_note;
    j["trl"] = range_to_json(t.trl, 1.0);
    j["size_score"] = t.size_score;
    j["cmos_integration_score"] = t.cmos_integration_score;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::vector<SwitchTechnology> catalog_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("catalog: must be an array");
  std::vector<SwitchTechnology> catalog;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("name") || !e.at("name").is_string()) {
      throw ValidationError("catalog entry: missing string field name");
    }
    SwitchTechnology t;
    t.name = e.at("name").get<std::string>();
    const std::string scope = "catalog[" + t.name + "]";
    t.max_demonstrated_freq_hz = get_number(e, "max_demonstrated_freq_ghz", scope) * 1e9;
    if (e.contains("ron_coff_fs") && !e.at("ron_coff_fs").is_null()) {
      t.ron_coff_s = range_from_json(e.at("ron_coff_fs"), scope + ".ron_coff_fs", 1e-15);
    }
    if (e.contains("ron_coff_note")) t.ron_coff_note = e.at("ron_coff_note").get<std::string>();
    t.dc_dissipation_w = e.contains("dc_dissipation_mw")
                             ? range_from_json(e.at("dc_dissipation_mw"), scope + ".dc_dissipation_mw", 1e-3)
                             : ValueRange{0.0, 0.0};
    if (e.contains("switching_energy_nj") && !e.at("switching_energy_nj").is_null()) {
      t.switching_energy_j =
          range_from_json(e.at("switching_energy_nj"), scope + ".switching_energy_nj", 1e-9);
    }
    if (e.contains("switching_energy_note")) {
      t.switching_energy_note = e.at("switching_energy_note").get<std::string>();
    }
    t.trl = e.contains("trl") ? range_from_json(e.at("trl"), scope + ".trl", 1.0) : ValueRange{1, 1};
    if (!(t.trl.lo >= 1.0 && t.trl.hi <= 9.0)) {
      throw ValidationError(scope + ".trl: must lie within [1, 9]");
    }
    t.size_score = get_int_or(e, "size_score", scope, 1);
    t.cmos_integration_score = get_int_or(e, "cmos_integration_score", scope, 1);
    catalog.push_back(std::move(t));
  }
  return catalog;
}

json techs_table_json(const std::vector<SwitchTechnology>& catalog) {
  json arr = catalog_to_json(catalog);
  for (size_t i = 0; i < catalog.size(); ++i) {
    const auto fc = cutoff_frequency_hz(catalog[i]);
    if (!fc) {
      arr[i]["cutoff_frequency_thz"] = nullptr;
    } else {
      json r;
      r["min"] = round_sig9(fc->lo / 1e12);
      r["max"] = std::isinf(fc->hi) ? json(nullptr) : json(round_sig9(fc->hi / 1e12));
      arr[i]["cutoff_frequency_thz"] = r;
    }
  }
  return arr;
}

json power_table_json(std::int64_t switch_count, const std::vector<SwitchTechnology>& catalog,
                      double on_fraction) {
  struct Row {
    ValueRange power;
    const SwitchTechnology* tech;
  };
  std::vector<Row> rows;
  rows.reserve(catalog.size());
  for (const auto& t : catalog) {
    rows.push_back({static_power_w(switch_count, t, on_fraction), &t});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.power.lo != b.power.lo) return a.power.lo < b.power.lo;
    if (a.power.hi != b.power.hi) return a.power.hi < b.power.hi;
    return a.tech->name < b.tech->name;
  });

  json arr = json::array();
  for (const auto& row : rows) {
    json j;
    j["technology"] = row.tech->name;
    j["switch_count"] = switch_count;
    j["on_fraction"] = round_sig9(on_fraction);
    j["static_power_w"] = range_to_json(row.power, 1.0);
    const auto energy = reconfiguration_energy_j(switch_count, *row.tech);
    j["reconfiguration_energy_j"] = energy ? range_to_json(*energy, 1.0) : json(nullptr);
    if (!energy) j["reconfiguration_energy_note"] = row.tech->switching_energy_note;
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace risplan
