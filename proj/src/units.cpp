#include "risplan/units.hpp"

#include <cmath>

namespace risplan {

double wavelength_m(Frequency f) {
  if (!(f.hz > 0.0)) {
    throw std::domain_error("wavelength_m: frequency must be positive, got " +
                            std::to_string(f.hz) + " Hz");
  }
  return speed_of_light_m_s / f.hz;
}

double db_from_linear(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("db_from_linear: argument must be positive, got " +
                            std::to_string(x));
  }
  return 10.0 * std::log10(x);
}

double linear_from_db(double db) { return std::pow(10.0, db / 10.0); }

PowerLevel noise_power(const NoiseModel& n, double bandwidth_hz) {
  if (!(bandwidth_hz > 0.0)) {
    throw std::domain_error("noise_power: bandwidth must be positive, got " +
                            std::to_string(bandwidth_hz) + " Hz");
  }
  return PowerLevel{n.density_dbm_hz + n.noise_figure_db + db_from_linear(bandwidth_hz)};
}

double snr_db(PowerLevel received, PowerLevel noise) { return received.dbm - noise.dbm; }

double shannon_capacity_bps(double bandwidth_hz, double snr_db_value) {
  if (!(bandwidth_hz > 0.0)) {
    throw std::domain_error("shannon_capacity_bps: bandwidth must be positive, got " +
                            std::to_string(bandwidth_hz) + " Hz");
  }
  return bandwidth_hz * std::log2(1.0 + linear_from_db(snr_db_value));
}

}  // namespace risplan
