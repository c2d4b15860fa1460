#pragma once

#include "risplan/json_io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace risplan {

/// One swept axis for the squint command.
struct SweepSpec {
  std::string parameter;  // "panel_side_mm" or "theta_deg"
  double start = 0.0;
  double stop = 0.0;
  int steps = 0;

  std::vector<double> values() const;

  friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

enum class OutputFormat { json, csv };

struct OutputSpec {
  std::optional<std::string> path;  // stdout when unset
  OutputFormat format = OutputFormat::json;

  friend bool operator==(const OutputSpec&, const OutputSpec&) = default;
};

struct ThetaGridSpec {
  double start_deg = 0.0;
  double stop_deg = 0.0;
  int count = 0;

  std::vector<double> to_grid() const;

  friend bool operator==(const ThetaGridSpec&, const ThetaGridSpec&) = default;
};

/// Aperture described either by its physical side (gridded at lambda/2) or by
/// an explicit cell count.
struct ApertureConfig {
  std::optional<double> panel_side_m;
  std::optional<int> cells_per_side;
  Frequency design_frequency;
  std::optional<double> cell_spacing_m;

  friend bool operator==(const ApertureConfig&, const ApertureConfig&) = default;
};

ApertureDesign resolve_aperture(const ApertureConfig& cfg, PhaseBits bits);

/// Parsed command configuration. Which fields must be present depends on the
/// subcommand; each command validates what it uses.
struct RunConfig {
  std::string schema_version = "risplan/1";
  std::optional<ScenarioSpec> scenario;
  std::vector<double> theta_max_deg;
  BandwidthMethod bandwidth_method = BandwidthMethod::numeric;
  std::optional<SweepSpec> sweep;
  // pattern
  std::optional<ApertureConfig> aperture;
  std::optional<SteeringTarget> target;
  std::vector<PhaseBits> quantizations;
  std::optional<ThetaGridSpec> theta_grid;
  std::vector<double> eval_frequencies_hz;
  // squint
  std::optional<Frequency> frequency;
  std::optional<double> squint_theta_deg;
  std::optional<double> squint_panel_side_m;
  PhaseBits squint_phase_bits{};
  // power
  std::optional<std::int64_t> switch_count;
  double on_fraction = 1.0;
  std::optional<std::string> catalog_path;

  OutputSpec output;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Throws ValidationError naming the offending field.
RunConfig run_config_from_json(const json& j);
json run_config_to_json(const RunConfig& cfg);

/// Reads and parses a config file; file and JSON errors become ValidationError.
RunConfig load_run_config(const std::string& path);

}  // namespace risplan
