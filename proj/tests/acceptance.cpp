// Acceptance suite: exercises the published requirement tables and physics
// claims end to end, printing one pass/fail line per criterion. Exits with
// the number of failed criteria.

#include "risplan/aperture.hpp"
#include "risplan/link_budget.hpp"
#include "risplan/switch_catalog.hpp"
#include "risplan/units.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

using namespace risplan;

namespace {

constexpr double pi = std::numbers::pi;

struct Criterion {
  int number;
  std::string title;
  bool ok = true;
  std::vector<std::string> details;

  Criterion(int n, std::string t) : number(n), title(std::move(t)) {}

  void expect(bool passed, const std::string& what) {
    ok = ok && passed;
    details.push_back(std::string(passed ? "  - ok   " : "  - FAIL ") + what);
  }

  void expect_within(double value, double expected, double tolerance, const std::string& what) {
    char line[256];
    std::snprintf(line, sizeof line, "%s: %.6g (expected %.6g +/- %.6g)", what.c_str(), value,
                  expected, tolerance);
    expect(std::abs(value - expected) <= tolerance, line);
  }

  void expect_within_rel(double value, double expected, double rel, const std::string& what) {
    char line[256];
    std::snprintf(line, sizeof line, "%s: %.6g (expected %.6g +/- %.3g%%)", what.c_str(), value,
                  expected, rel * 100.0);
    expect(std::abs(value - expected) <= rel * std::abs(expected), line);
  }
};

int finish(const Criterion& c) {
  std::printf("[%s] criterion %d: %s\n", c.ok ? "PASS" : "FAIL", c.number, c.title.c_str());
  for (const auto& line : c.details) std::printf("%s\n", line.c_str());
  return c.ok ? 0 : 1;
}

ScenarioSpec table_scenario(double half_range_m, double theta_max_deg) {
  ScenarioSpec s;
  s.frequency = Frequency::from_ghz(140.0);
  s.d1_m = half_range_m;
  s.d2_m = half_range_m;
  s.total_antenna_gain_dbi = 56.0;
  s.radiated_power_dbm = 20.0;
  s.noise = NoiseModel{-174.0, 5.0};
  s.target_received_power_dbm = -59.0;
  s.reference_bandwidth_hz = 10e9;
  s.phase_bits = 2;
  s.switches_per_bit = 2;
  s.aperture_efficiency = 0.25;
  s.theta_max_deg = theta_max_deg;
  return s;
}

struct TableColumn {
  double theta_deg;
  double side_mm;
  double cells;
  double cells_tol;
  double switches;
  double bandwidth_ghz;
  double snr_db;
  double capacity_gbps;
};

void check_table(Criterion& c, double half_range_m, const TableColumn& col) {
  ScenarioSpec s = table_scenario(half_range_m, col.theta_deg);
  const std::string tag = "theta_max " + std::to_string(static_cast<int>(col.theta_deg)) + " deg";

  const auto start = std::chrono::steady_clock::now();
  const RisRequirementsReport numeric = evaluate_scenario(s, BandwidthMethod::numeric);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const RisRequirementsReport analytic = evaluate_scenario(s, BandwidthMethod::analytic);

  c.expect_within(analytic.panel_side_m * 1e3, col.side_mm, 2.0, tag + " panel side mm");
  c.expect_within(analytic.cells_per_side, col.cells, col.cells_tol, tag + " cells per side");
  c.expect_within_rel(static_cast<double>(analytic.switch_count), col.switches, 0.05,
                      tag + " switch count");
  c.expect_within_rel(numeric.max_bandwidth_3db_hz / 1e9, col.bandwidth_ghz, 0.25,
                      tag + " numeric 3 dB bandwidth GHz");
  c.expect_within_rel(analytic.max_bandwidth_3db_hz / 1e9, col.bandwidth_ghz, 0.10,
                      tag + " analytic 3 dB bandwidth GHz");
  c.expect_within(analytic.snr_db, col.snr_db, 0.5, tag + " SNR dB at the computed bandwidth");
  c.expect_within_rel(analytic.capacity_bps / 1e9, col.capacity_gbps, 0.05,
                      tag + " capacity Gbps");

  char line[128];
  std::snprintf(line, sizeof line, "%s numeric evaluation took %.2f s (< 10 s)", tag.c_str(),
                seconds);
  c.expect(seconds < 10.0, line);
}

double measured_peak_gain_db(const ApertureDesign& a, const PhaseProfile& p, Frequency f,
                             const SteeringTarget& t, double lo_deg, double hi_deg) {
  std::vector<double> grid;
  for (double th = lo_deg; th <= hi_deg; th += 0.02) grid.push_back(th);
  double best = -1e30;
  for (const auto& s : radiation_pattern(a, p, f, t, grid).samples) {
    best = std::max(best, s.gain_db);
  }
  return best;
}

// Mean beam-peak drop from quantizing a tilt profile, averaged over random
// global phase offsets. Independent of the closed-form path.
double quantization_loss_oracle_db(int bits, int cells) {
  const Frequency f = Frequency::from_ghz(140.0);
  const ApertureDesign a{f, cells, 0.5 * wavelength_m(f)};
  SteeringTarget t;
  t.outgoing = PlaneWaveDir{45.0, 0.0};
  const PhaseProfile continuous = synthesize_profile(a, t);
  const double reference = pattern_gain_db(a, continuous, f, t, 45.0, 0.0);

  std::mt19937 rng(987654);
  std::uniform_real_distribution<double> offset(0.0, 2.0 * pi);
  const int trials = 16;
  double mean_linear = 0.0;
  for (int i = 0; i < trials; ++i) {
    const double delta = offset(rng);
    PhaseProfile shifted = continuous;
    for (double& phase : shifted.phase_rad) phase = std::fmod(phase + delta, 2.0 * pi);
    const PhaseProfile q = quantize_profile(shifted, bits);
    const double gain = pattern_gain_db(a, q, f, t, 45.0, 0.0);
    mean_linear += std::pow(10.0, (gain - reference) / 10.0);
  }
  return -10.0 * std::log10(mean_linear / trials);
}

int criterion_outdoor() {
  Criterion c{1, "outdoor requirements table (140 GHz, 100 m link)"};
  check_table(c, 50.0, {50.0, 118.0, 111.0, 2.0, 48560.0, 2.4, 16.0, 13.0});
  check_table(c, 50.0, {60.0, 125.0, 118.0, 2.0, 55060.0, 1.5, 18.0, 9.3});
  return finish(c);
}

int criterion_indoor() {
  Criterion c{2, "indoor requirements table (140 GHz, 20 m link)"};
  check_table(c, 10.0, {50.0, 24.0, 22.0, 1.0, 1940.0, 12.0, 9.2, 38.0});
  check_table(c, 10.0, {60.0, 26.0, 24.0, 1.0, 2200.0, 7.8, 11.1, 29.0});
  return finish(c);
}

int criterion_reference_bandwidth() {
  Criterion c{3, "reference 10 GHz bandwidth at -59 dBm gives 10 dB SNR"};
  const double snr = reference_snr_db(table_scenario(50.0, 50.0));
  c.expect_within(snr, 10.0, 0.01, "reference SNR dB");
  return finish(c);
}

int criterion_quantization() {
  Criterion c{4, "phase quantization loss and image lobe"};
  const double expected_closed[] = {3.92, 0.91, 0.22};
  for (int bits = 1; bits <= 3; ++bits) {
    const double closed = quantization_loss_db(bits);
    const double oracle = quantization_loss_oracle_db(bits, 32);
    c.expect_within(closed, expected_closed[bits - 1], 0.05,
                    std::to_string(bits) + "-bit closed-form loss dB");
    c.expect_within(oracle, closed, 0.3,
                    std::to_string(bits) + "-bit numeric oracle vs closed form dB");
  }

  // image lobe at the mirrored beam direction: strong at 1 bit, gone at >= 2
  const Frequency f = Frequency::from_ghz(140.0);
  const ApertureDesign a{f, 32, 0.5 * wavelength_m(f)};
  SteeringTarget t;
  t.outgoing = PlaneWaveDir{45.0, 0.0};
  const PhaseProfile continuous = synthesize_profile(a, t);
  for (int bits = 1; bits <= 3; ++bits) {
    const PhaseProfile q = quantize_profile(continuous, bits);
    const double main = measured_peak_gain_db(a, q, f, t, 40.0, 50.0);
    const double image = measured_peak_gain_db(a, q, f, t, -50.0, -40.0);
    char line[128];
    std::snprintf(line, sizeof line, "%d-bit image lobe %.2f dB below the main beam", bits,
                  main - image);
    c.expect(bits == 1 ? (image > main - 1.5) : (image < main - 10.0), line);
  }
  return finish(c);
}

int criterion_scan_loss() {
  Criterion c{5, "60 degree steering costs 3 dB of directivity"};
  const Frequency f = Frequency::from_ghz(140.0);
  const ApertureDesign a{f, 30, 0.5 * wavelength_m(f)};

  const PhaseProfile uniform = synthesize_profile(a, SteeringTarget{});
  const double broadside = measured_peak_gain_db(a, uniform, f, SteeringTarget{}, -3.0, 3.0);

  SteeringTarget steered;
  steered.outgoing = PlaneWaveDir{60.0, 0.0};
  const PhaseProfile profile = synthesize_profile(a, steered);
  const double steered_peak = measured_peak_gain_db(a, profile, f, steered, 52.0, 68.0);

  c.expect_within(broadside - steered_peak, 3.0, 0.5, "steered peak drop dB (30x30)");
  c.expect_within(scan_loss_db(60.0), 3.01, 0.01, "closed-form scan loss dB at 60 deg");
  return finish(c);
}

int criterion_squint_law() {
  Criterion c{6, "beam squint follows sin(theta_f) = (f0/f) sin(theta_0); B*D constant"};
  const Frequency f0 = Frequency::from_ghz(30.0);
  const ApertureDesign a{f0, 30, 0.5 * wavelength_m(f0), 1};
  SteeringTarget t;
  t.outgoing = PlaneWaveDir{45.0, 0.0};
  const PhaseProfile profile = quantize_profile(synthesize_profile(a, t), 1);
  const double side_m = a.physical_side_m();

  std::vector<double> grid;
  for (double th = 10.0; th <= 80.0; th += 0.25) grid.push_back(th);

  for (double ratio : {0.9, 0.95, 1.05, 1.1}) {
    const Frequency f{f0.hz * ratio};
    const RadiationPattern pattern = radiation_pattern(a, profile, f, t, grid);
    const double peak = peak_direction(pattern).theta_deg;
    const double expected_u = std::sin(pi / 4.0) / ratio;
    const double half_null_to_null_u = wavelength_m(f) / side_m;
    char line[160];
    std::snprintf(line, sizeof line,
                  "f/f0 = %.2f: |sin(peak) - (f0/f) sin 45| = %.4f (budget %.4f)", ratio,
                  std::abs(std::sin(peak * pi / 180.0) - expected_u), half_null_to_null_u);
    c.expect(std::abs(std::sin(peak * pi / 180.0) - expected_u) <= half_null_to_null_u, line);
  }

  // bandwidth-size product at fixed steering angle
  const Frequency f140 = Frequency::from_ghz(140.0);
  SteeringTarget t50;
  t50.outgoing = PlaneWaveDir{50.0, 0.0};
  std::vector<double> products;
  for (double side_mm : {24.0, 50.0, 118.0}) {
    const ApertureDesign grid_a = build_grid(side_mm * 1e-3, f140);
    products.push_back(*squint_bandwidth_numeric(grid_a, t50, f140) * side_mm * 1e-3);
  }
  double mean = 0.0;
  for (double p : products) mean += p;
  mean /= products.size();
  for (size_t i = 0; i < products.size(); ++i) {
    char line[128];
    std::snprintf(line, sizeof line, "B*D at side %zu: %.4g Hz*m (mean %.4g, +/-5%%)", i,
                  products[i], mean);
    c.expect(std::abs(products[i] - mean) <= 0.05 * mean, line);
  }
  return finish(c);
}

int criterion_sizing_round_trip() {
  Criterion c{7, "forward radar equation closes on the solved panel size (1000 scenarios)"};
  std::mt19937 rng(20240811);
  std::uniform_real_distribution<double> freq_ghz(1.0, 300.0);
  std::uniform_real_distribution<double> dist(1.0, 1000.0);
  std::uniform_real_distribution<double> gain(0.0, 80.0);
  std::uniform_real_distribution<double> power(-10.0, 40.0);
  std::uniform_real_distribution<double> target(-120.0, -20.0);
  std::uniform_real_distribution<double> eta(0.05, 1.0);
  std::uniform_real_distribution<double> theta(1.0, 85.0);

  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    ScenarioSpec s = table_scenario(50.0, 50.0);
    s.frequency = Frequency::from_ghz(freq_ghz(rng));
    s.d1_m = dist(rng);
    s.d2_m = dist(rng);
    s.total_antenna_gain_dbi = gain(rng);
    s.radiated_power_dbm = power(rng);
    s.target_received_power_dbm = target(rng);
    s.aperture_efficiency = eta(rng);
    s.theta_max_deg = theta(rng);

    const double side = required_panel_side_m(s);
    const double sigma = ris_rcs_m2(side * side, wavelength_m(s.frequency),
                                    s.aperture_efficiency, s.theta_max_deg, s.rcs);
    worst = std::max(worst, std::abs(received_power(s, sigma).dbm - s.target_received_power_dbm));
  }
  char line[128];
  std::snprintf(line, sizeof line, "worst round-trip error %.6f dB (<= 0.01 dB)", worst);
  c.expect(worst <= 0.01, line);
  return finish(c);
}

int criterion_switch_catalog() {
  Criterion c{8, "switch catalog: kilowatt claim, cutoff figure of merit, reconfiguration energy"};

  const SwitchTechnology* bicmos = nullptr;
  for (const auto& t : builtin_catalog()) {
    if (t.name == "BiCMOS") bicmos = &t;
  }
  c.expect(bicmos != nullptr, "BiCMOS present in the catalog");
  if (bicmos) {
    const ValueRange power = static_power_w(48560, *bicmos, 1.0);
    c.expect_within_rel(power.lo, 490.0, 0.02, "outdoor static power lower bound W");
    c.expect_within_rel(power.hi, 2430.0, 0.02, "outdoor static power upper bound W");
    c.expect(power.lo <= 1000.0 && 1000.0 <= power.hi, "kW level falls inside the dissipation range");
  }

  c.expect_within(cutoff_frequency_hz(90e-15) / 1e12, 1.77, 0.01, "F_C(90 fs) in THz");

  const ValueRange energy = reconfiguration_energy_j(48560, 49e-12);
  c.expect_within_rel(energy.lo, 2.38e-6, 0.01, "full-panel reconfiguration energy J at 49 pJ");
  return finish(c);
}

}  // namespace

int main() {
  int failures = 0;
  failures += criterion_outdoor();
  failures += criterion_indoor();
  failures += criterion_reference_bandwidth();
  failures += criterion_quantization();
  failures += criterion_scan_loss();
  failures += criterion_squint_law();
  failures += criterion_sizing_round_trip();
  failures += criterion_switch_catalog();

  std::printf("%d of 8 criteria passed\n", 8 - failures);
  return failures;
}
