#pragma once

#include <stdexcept>
#include <string>

namespace risplan {

// Exact SI value. All frequency/wavelength conversions in the toolkit use it.
inline constexpr double speed_of_light_m_s = 299792458.0;

/// Configuration or input value that violates a documented invariant.
/// The message names the offending field.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// A numerical search failed (e.g. a band edge could not be bracketed).
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

/// Carrier or evaluation frequency. Must be positive wherever it is used.
struct Frequency {
  double hz = 0.0;

  static Frequency from_ghz(double ghz) { return Frequency{ghz * 1e9}; }
  double ghz() const { return hz / 1e9; }

  friend bool operator==(const Frequency&, const Frequency&) = default;
};

/// Absolute power referenced to 1 mW.
struct PowerLevel {
  double dbm = 0.0;

  friend bool operator==(const PowerLevel&, const PowerLevel&) = default;
};

/// Receiver noise description: thermal density plus receiver noise figure.
struct NoiseModel {
  double density_dbm_hz = -174.0;
  double noise_figure_db = 0.0;

  friend bool operator==(const NoiseModel&, const NoiseModel&) = default;
};

/// Free-space wavelength c/f. Throws std::domain_error for f <= 0.
double wavelength_m(Frequency f);

/// 10*log10(x). Throws std::domain_error for x <= 0.
double db_from_linear(double x);

/// 10^(db/10).
double linear_from_db(double db);

/// Integrated noise power: density + noise figure + 10*log10(bandwidth).
/// Throws std::domain_error for bandwidth <= 0.
PowerLevel noise_power(const NoiseModel& n, double bandwidth_hz);

/// Signal-to-noise ratio of two absolute power levels.
double snr_db(PowerLevel received, PowerLevel noise);

/// Shannon-Hartley capacity B*log2(1 + snr_linear) in bit/s.
/// Throws std::domain_error for bandwidth <= 0.
double shannon_capacity_bps(double bandwidth_hz, double snr_db_value);

}  // namespace risplan
