#include "risplan/link_budget.hpp"

#include <cmath>
#include <numbers>

namespace risplan {

namespace {

double radians(double deg) { return deg * std::numbers::pi / 180.0; }

constexpr double four_pi = 4.0 * std::numbers::pi;

void require(bool ok, const char* field, const std::string& detail) {
  if (!ok) throw ValidationError("scenario." + std::string(field) + ": " + detail);
}

}  // namespace

void ScenarioSpec::validate() const {
  require(frequency.hz > 0.0, "frequency", "must be positive");
  require(d1_m > 0.0, "d1_m", "must be positive");
  require(d2_m > 0.0, "d2_m", "must be positive");
  require(std::isfinite(total_antenna_gain_dbi), "total_antenna_gain_dbi", "must be finite");
  require(std::isfinite(radiated_power_dbm), "radiated_power_dbm", "must be finite");
  require(std::isfinite(noise.density_dbm_hz), "noise_density_dbm_hz", "must be finite");
  require(noise.noise_figure_db >= 0.0, "noise_figure_db", "must be >= 0");
  require(std::isfinite(target_received_power_dbm), "target_received_power_dbm", "must be finite");
  require(reference_bandwidth_hz > 0.0, "reference_bandwidth_hz", "must be positive");
  require(phase_bits >= 1, "phase_bits", "must be >= 1");
  require(switches_per_bit >= 1, "switches_per_bit", "must be >= 1");
  require(aperture_efficiency > 0.0 && aperture_efficiency <= 1.0, "aperture_efficiency",
          "must be in (0, 1]");
  require(theta_max_deg > 0.0 && theta_max_deg < 90.0, "theta_max_deg", "must be in (0, 90)");
  require(rcs.cos_exponent >= 0.0, "rcs.cos_exponent", "must be >= 0");
  require(squint_beta > 0.0, "squint_beta", "must be positive");
}

double ris_rcs_m2(double panel_area_m2, double wavelength, double eta, double theta_deg,
                  const RcsConvention& conv) {
  if (!(panel_area_m2 > 0.0)) throw std::domain_error("ris_rcs_m2: panel area must be positive");
  if (!(wavelength > 0.0)) throw std::domain_error("ris_rcs_m2: wavelength must be positive");
  if (!(eta > 0.0 && eta <= 1.0)) throw std::domain_error("ris_rcs_m2: eta must be in (0, 1]");
  if (!(theta_deg >= 0.0 && theta_deg < 90.0)) {
    throw std::domain_error("ris_rcs_m2: theta_deg must be in [0, 90), got " +
                            std::to_string(theta_deg));
  }
  const double area = conv.eta_placement == EtaPlacement::on_area ? eta * panel_area_m2 : panel_area_m2;
  double sigma = four_pi * area * area / (wavelength * wavelength) *
                 std::pow(std::cos(radians(theta_deg)), conv.cos_exponent);
  if (conv.eta_placement == EtaPlacement::on_power) sigma *= eta;
  return sigma;
}

PowerLevel received_power(const ScenarioSpec& s, double rcs_m2) {
  s.validate();
  if (!(rcs_m2 > 0.0)) throw std::domain_error("received_power: rcs must be positive");
  const double lambda = wavelength_m(s.frequency);
  const double dbm = s.radiated_power_dbm + s.total_antenna_gain_dbi +
                     10.0 * std::log10(lambda * lambda * rcs_m2) -
                     30.0 * std::log10(four_pi) -
                     20.0 * std::log10(s.d1_m) - 20.0 * std::log10(s.d2_m);
  return PowerLevel{dbm};
}

double required_panel_side_m(const ScenarioSpec& s) {
  s.validate();
  const double lambda = wavelength_m(s.frequency);
  const double sigma_db = s.target_received_power_dbm - s.radiated_power_dbm -
                          s.total_antenna_gain_dbi - 20.0 * std::log10(lambda) +
                          30.0 * std::log10(four_pi) +
                          20.0 * std::log10(s.d1_m) + 20.0 * std::log10(s.d2_m);
  const double sigma = std::pow(10.0, sigma_db / 10.0);
  const double cos_term = std::pow(std::cos(radians(s.theta_max_deg)), s.rcs.cos_exponent);
  double area = std::sqrt(sigma * lambda * lambda / (four_pi * cos_term));
  if (s.rcs.eta_placement == EtaPlacement::on_power) {
    area /= std::sqrt(s.aperture_efficiency);
  } else {
    area /= s.aperture_efficiency;
  }
  const double side = std::sqrt(area);
  if (!std::isfinite(side) || !(side > 0.0)) {
    throw SolverError("required_panel_side_m: sizing target unreachable (required cross-section " +
                      std::to_string(sigma_db) + " dBsm overflows)");
  }
  return side;
}

std::int64_t switch_count(int cells_per_side, int bits, int switches_per_bit) {
  if (cells_per_side < 1) throw std::domain_error("switch_count: cells_per_side must be >= 1");
  if (bits < 1) throw std::domain_error("switch_count: bits must be >= 1");
  if (switches_per_bit < 1) throw std::domain_error("switch_count: switches_per_bit must be >= 1");
  return static_cast<std::int64_t>(cells_per_side) * cells_per_side * bits * switches_per_bit;
}

RisRequirementsReport evaluate_scenario(const ScenarioSpec& s, BandwidthMethod method) {
  s.validate();
  RisRequirementsReport report;
  report.bandwidth_method = method;
  report.panel_side_m = required_panel_side_m(s);

  const ApertureDesign grid = build_grid(report.panel_side_m, s.frequency, s.phase_bits);
  report.cells_per_side = grid.cells_per_side;
  report.switch_count = switch_count(grid.cells_per_side, s.phase_bits, s.switches_per_bit);

  if (method == BandwidthMethod::numeric) {
    SteeringTarget target;
    target.outgoing = PlaneWaveDir{s.theta_max_deg, 0.0};
    // theta_max is validated > 0, so the solver cannot report "unbounded"
    report.max_bandwidth_3db_hz = *squint_bandwidth_numeric(grid, target, s.frequency);
  } else {
    report.max_bandwidth_3db_hz =
        squint_bandwidth_analytic(grid.physical_side_m(), s.theta_max_deg, s.frequency, s.squint_beta);
  }

  const PowerLevel noise = noise_power(s.noise, report.max_bandwidth_3db_hz);
  report.snr_db = snr_db(PowerLevel{s.target_received_power_dbm}, noise);
  report.capacity_bps = shannon_capacity_bps(report.max_bandwidth_3db_hz, report.snr_db);
  return report;
}

double reference_snr_db(const ScenarioSpec& s) {
  s.validate();
  return snr_db(PowerLevel{s.target_received_power_dbm},
                noise_power(s.noise, s.reference_bandwidth_hz));
}

}  // namespace risplan
