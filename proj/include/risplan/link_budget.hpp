#pragma once

#include "risplan/aperture.hpp"
#include "risplan/units.hpp"

#include <cstdint>

namespace risplan {

/// Where the aperture efficiency enters the scattering cross-section:
/// on_power multiplies sigma once; on_area derates the physical area before
/// squaring (so it enters sigma twice).
enum class EtaPlacement { on_power, on_area };

/// The bi-static cross-section convention is a declared model; the cosine
/// exponent and efficiency placement are configurable.
struct RcsConvention {
  double cos_exponent = 1.0;
  EtaPlacement eta_placement = EtaPlacement::on_power;

  friend bool operator==(const RcsConvention&, const RcsConvention&) = default;
};

/// One wireless scenario: carrier, path split, link gains/powers, noise,
/// quantization hardware, and the steering requirement.
struct ScenarioSpec {
  Frequency frequency;
  double d1_m = 0.0;  // transmitter -> panel
  double d2_m = 0.0;  // panel -> terminal
  double total_antenna_gain_dbi = 0.0;
  double radiated_power_dbm = 0.0;
  NoiseModel noise;
  double target_received_power_dbm = 0.0;
  double reference_bandwidth_hz = 0.0;
  int phase_bits = 2;
  int switches_per_bit = 2;
  double aperture_efficiency = 0.25;
  double theta_max_deg = 0.0;
  RcsConvention rcs;
  double squint_beta = default_squint_beta;

  /// Throws ValidationError naming the first offending field.
  void validate() const;

  friend bool operator==(const ScenarioSpec&, const ScenarioSpec&) = default;
};

/// Bi-static cross-section of a square reflecting panel:
/// sigma = (4*pi*A^2/lambda^2) * eta * cos(theta)^e (with the configured
/// placement of eta). Square meters.
double ris_rcs_m2(double panel_area_m2, double wavelength, double eta, double theta_deg,
                  const RcsConvention& conv = {});

/// Bi-static radar equation: power reaching the terminal through a scatterer
/// of cross-section sigma.
PowerLevel received_power(const ScenarioSpec& s, double rcs_m2);

/// Smallest square panel side that delivers the scenario's target received
/// power at the worst-case steering angle theta_max.
double required_panel_side_m(const ScenarioSpec& s);

/// Control elements for the whole panel: cells^2 * bits * switches_per_bit.
std::int64_t switch_count(int cells_per_side, int bits, int switches_per_bit);

enum class BandwidthMethod { numeric, analytic };

/// Hardware requirements and performance bounds for one scenario; one column
/// of the requirements tables.
struct RisRequirementsReport {
  double panel_side_m = 0.0;
  int cells_per_side = 0;
  std::int64_t switch_count = 0;
  double max_bandwidth_3db_hz = 0.0;
  double snr_db = 0.0;
  double capacity_bps = 0.0;
  BandwidthMethod bandwidth_method = BandwidthMethod::numeric;
};

/// Full chain: size the panel, grid it, count switches, bound the bandwidth
/// by beam squint, then noise/SNR/capacity at that bandwidth.
RisRequirementsReport evaluate_scenario(const ScenarioSpec& s,
                                        BandwidthMethod method = BandwidthMethod::numeric);

/// SNR at the scenario's reference bandwidth instead of the squint-limited
/// one (the minimum-received-power design condition).
double reference_snr_db(const ScenarioSpec& s);

}  // namespace risplan
