#include "risplan/aperture.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>

namespace risplan {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr double half_power_db = 3.0102999566398120;  // 10*log10(2)

double radians(double deg) { return deg * std::numbers::pi / 180.0; }
double degrees(double rad) { return rad * 180.0 / std::numbers::pi; }

double wrap_two_pi(double x) {
  double r = std::fmod(x, two_pi);
  if (r < 0.0) r += two_pi;
  if (r >= two_pi) r = 0.0;  // fmod rounding can land exactly on 2*pi
  return r;
}

void check_aperture(const ApertureDesign& a) {
  if (a.cells_per_side < 1) throw std::domain_error("aperture: cells_per_side must be >= 1");
  if (!(a.cell_spacing_m > 0.0)) throw std::domain_error("aperture: cell_spacing_m must be positive");
  if (!(a.design_frequency.hz > 0.0)) throw std::domain_error("aperture: design_frequency must be positive");
  if (a.phase_bits && *a.phase_bits < 1) throw std::domain_error("aperture: phase_bits must be >= 1");
}

void check_plane_dir(const PlaneWaveDir& d, const char* what) {
  if (!(d.theta_deg >= 0.0 && d.theta_deg < 90.0)) {
    throw std::domain_error(std::string(what) + ": theta_deg must be in [0, 90), got " +
                            std::to_string(d.theta_deg));
  }
}

void check_target(const SteeringTarget& t) {
  if (const auto* pw = std::get_if<PlaneWaveDir>(&t.incident)) {
    check_plane_dir(*pw, "incident plane wave");
  } else {
    const auto& src = std::get<PointSource>(t.incident);
    if (!(src.z_m > 0.0)) throw std::domain_error("point source: z_m must be positive (in front of panel)");
  }
  check_plane_dir(t.outgoing, "outgoing plane wave");
}

// Per-cell data that does not depend on the observation angle or evaluation
// frequency. The field toward (theta, cut phi) at frequency f is
//   sqrt(cos theta) * sum_c amp_c * exp(j*(k(f)*(inc_path_c + sin(theta)*obs_proj_c) + phase_c))
// normalized by cells^2 so the uniform broadside reference sits at 0 dB.
struct PatternEvaluator {
  std::vector<double> inc_path_m;
  std::vector<double> obs_proj_m;
  std::vector<double> phase_rad;
  std::vector<double> amp;
  double norm = 1.0;

  PatternEvaluator(const ApertureDesign& a, const PhaseProfile& p, const SteeringTarget& t,
                   double cut_phi_deg) {
    check_aperture(a);
    check_target(t);
    const int n = a.cells_per_side;
    if (p.cells_per_side != n || p.phase_rad.size() != static_cast<size_t>(n) * n) {
      throw std::domain_error("radiation pattern: profile grid does not match the aperture");
    }
    const double d = a.cell_spacing_m;
    const double half = 0.5 * (n - 1);
    const double cphi = std::cos(radians(cut_phi_deg));
    const double sphi = std::sin(radians(cut_phi_deg));

    const size_t cells = static_cast<size_t>(n) * n;
    inc_path_m.reserve(cells);
    obs_proj_m.reserve(cells);
    amp.reserve(cells);
    phase_rad = p.phase_rad;
    norm = static_cast<double>(cells);

    const auto* pw = std::get_if<PlaneWaveDir>(&t.incident);
    double usx = 0.0, usy = 0.0, amp_pw = 1.0;
    if (pw) {
      const double si = std::sin(radians(pw->theta_deg));
      usx = si * std::cos(radians(pw->phi_deg));
      usy = si * std::sin(radians(pw->phi_deg));
      amp_pw = std::sqrt(std::cos(radians(pw->theta_deg)));
    }
    const PointSource* src = pw ? nullptr : &std::get<PointSource>(t.incident);

    for (int row = 0; row < n; ++row) {
      const double y = (row - half) * d;
      for (int col = 0; col < n; ++col) {
        const double x = (col - half) * d;
        if (pw) {
          inc_path_m.push_back(usx * x + usy * y);
          amp.push_back(amp_pw);
        } else {
          const double dx = x - src->x_m;
          const double dy = y - src->y_m;
          const double r = std::sqrt(dx * dx + dy * dy + src->z_m * src->z_m);
          inc_path_m.push_back(-r);
          amp.push_back(std::sqrt(src->z_m / r));  // local incidence cosine
        }
        obs_proj_m.push_back(x * cphi + y * sphi);
      }
    }
  }

  double gain_db(Frequency f, double theta_deg) const {
    if (!(f.hz > 0.0)) throw std::domain_error("pattern evaluation: frequency must be positive");
    if (!(theta_deg > -90.0 && theta_deg < 90.0)) {
      throw std::domain_error("pattern evaluation: theta_deg must be in (-90, 90), got " +
                              std::to_string(theta_deg));
    }
    const double k = two_pi * f.hz / speed_of_light_m_s;
    const double s = std::sin(radians(theta_deg));
    std::complex<double> acc{0.0, 0.0};
    const size_t cells = inc_path_m.size();
    for (size_t i = 0; i < cells; ++i) {
      acc += amp[i] * std::polar(1.0, k * (inc_path_m[i] + s * obs_proj_m[i]) + phase_rad[i]);
    }
    const double mag = std::sqrt(std::cos(radians(theta_deg))) * std::abs(acc) / norm;
    return 20.0 * std::log10(std::max(mag, 1e-300));
  }
};

// Argmax over a local scan plus parabolic refinement; used for beam tracking.
double measure_peak_deg(const PatternEvaluator& eval, Frequency f, double center_deg,
                        double half_span_deg) {
  constexpr int n_scan = 41;
  const double lo = std::max(center_deg - half_span_deg, -89.9);
  const double hi = std::min(center_deg + half_span_deg, 89.9);
  const double step = (hi - lo) / (n_scan - 1);
  double best = lo;
  double best_gain = -1e30;
  std::vector<double> g(n_scan);
  for (int i = 0; i < n_scan; ++i) {
    const double th = lo + i * step;
    g[i] = eval.gain_db(f, th);
    if (g[i] > best_gain) {
      best_gain = g[i];
      best = th;
    }
  }
  const int i = static_cast<int>(std::lround((best - lo) / step));
  if (i > 0 && i < n_scan - 1) {
    const double denom = g[i - 1] - 2.0 * g[i] + g[i + 1];
    if (denom < -1e-15) {
      best += 0.5 * (g[i - 1] - g[i + 1]) / denom * step;
    }
  }
  return best;
}

}  // namespace

ApertureDesign build_grid(double panel_side_m, Frequency f, PhaseBits phase_bits) {
  if (!(panel_side_m > 0.0)) throw std::domain_error("build_grid: panel side must be positive");
  const double spacing = 0.5 * wavelength_m(f);
  const int cells = static_cast<int>(std::floor(panel_side_m / spacing + 0.5));  // ties up
  if (cells < 1) {
    throw std::domain_error("build_grid: panel side " + std::to_string(panel_side_m * 1e3) +
                            " mm is smaller than one " + std::to_string(spacing * 1e3) +
                            " mm cell");
  }
  if (phase_bits && *phase_bits < 1) throw std::domain_error("build_grid: phase_bits must be >= 1");
  return ApertureDesign{f, cells, spacing, phase_bits};
}

PhaseProfile synthesize_profile(const ApertureDesign& a, const SteeringTarget& t) {
  check_aperture(a);
  check_target(t);
  const int n = a.cells_per_side;
  const double d = a.cell_spacing_m;
  const double half = 0.5 * (n - 1);
  const double k0 = two_pi / wavelength_m(a.design_frequency);

  const double so = std::sin(radians(t.outgoing.theta_deg));
  const double uox = so * std::cos(radians(t.outgoing.phi_deg));
  const double uoy = so * std::sin(radians(t.outgoing.phi_deg));

  PhaseProfile prof;
  prof.cells_per_side = n;
  prof.phase_rad.resize(static_cast<size_t>(n) * n);

  const auto* pw = std::get_if<PlaneWaveDir>(&t.incident);
  double usx = 0.0, usy = 0.0;
  if (pw) {
    const double si = std::sin(radians(pw->theta_deg));
    usx = si * std::cos(radians(pw->phi_deg));
    usy = si * std::sin(radians(pw->phi_deg));
  }

  size_t idx = 0;
  for (int row = 0; row < n; ++row) {
    const double y = (row - half) * d;
    for (int col = 0; col < n; ++col, ++idx) {
      const double x = (col - half) * d;
      double phase;
      if (pw) {
        // cancels the incident tangential phase and imprints the outgoing one
        phase = -k0 * ((usx + uox) * x + (usy + uoy) * y);
      } else {
        const auto& src = std::get<PointSource>(t.incident);
        const double dx = x - src.x_m;
        const double dy = y - src.y_m;
        const double r = std::sqrt(dx * dx + dy * dy + src.z_m * src.z_m);
        phase = k0 * (r - (uox * x + uoy * y));
      }
      prof.phase_rad[idx] = wrap_two_pi(phase);
    }
  }
  return prof;
}

PhaseProfile quantize_profile(const PhaseProfile& p, int bits) {
  if (bits < 1) throw std::domain_error("quantize_profile: bits must be >= 1");
  if (bits > 30) throw std::domain_error("quantize_profile: bits must be <= 30");
  if (p.quantized_bits && *p.quantized_bits < bits) {
    throw std::domain_error("quantize_profile: profile already quantized coarser than " +
                            std::to_string(bits) + " bits");
  }
  const long n = 1L << bits;
  const double step = two_pi / static_cast<double>(n);

  PhaseProfile out = p;
  out.quantized_bits = bits;
  for (double& phase : out.phase_rad) {
    const double frac = wrap_two_pi(phase) / step;
    const long k_lo = static_cast<long>(std::floor(frac));
    const double t = frac - static_cast<double>(k_lo);
    long k;
    if (t < 0.5) {
      k = k_lo;
    } else if (t > 0.5) {
      k = k_lo + 1;
    } else {
      // exact tie: smaller state index wins (wrap-around included)
      const long a = k_lo % n;
      const long b = (k_lo + 1) % n;
      k = (a < b) ? k_lo : k_lo + 1;
    }
    phase = static_cast<double>(k % n) * step;
  }
  return out;
}

double pattern_gain_db(const ApertureDesign& a, const PhaseProfile& p, Frequency f,
                       const SteeringTarget& t, double theta_deg, double cut_phi_deg) {
  return PatternEvaluator(a, p, t, cut_phi_deg).gain_db(f, theta_deg);
}

RadiationPattern radiation_pattern(const ApertureDesign& a, const PhaseProfile& p, Frequency f,
                                   const SteeringTarget& t, std::span<const double> theta_grid_deg) {
  return radiation_pattern(a, p, f, t, theta_grid_deg, t.outgoing.phi_deg);
}

RadiationPattern radiation_pattern(const ApertureDesign& a, const PhaseProfile& p, Frequency f,
                                   const SteeringTarget& t, std::span<const double> theta_grid_deg,
                                   double cut_phi_deg) {
  if (theta_grid_deg.empty()) throw std::domain_error("radiation_pattern: empty angle grid");
  for (size_t i = 1; i < theta_grid_deg.size(); ++i) {
    if (!(theta_grid_deg[i] > theta_grid_deg[i - 1])) {
      throw std::domain_error("radiation_pattern: theta grid must be strictly increasing");
    }
  }
  const PatternEvaluator eval(a, p, t, cut_phi_deg);
  RadiationPattern pattern;
  pattern.frequency = f;
  pattern.cut_phi_deg = cut_phi_deg;
  pattern.samples.reserve(theta_grid_deg.size());
  for (double th : theta_grid_deg) {
    pattern.samples.push_back({th, eval.gain_db(f, th)});
  }
  return pattern;
}

double scan_loss_db(double theta_deg) {
  if (!(theta_deg >= 0.0 && theta_deg < 90.0)) {
    throw std::domain_error("scan_loss_db: theta_deg must be in [0, 90), got " +
                            std::to_string(theta_deg));
  }
  return -10.0 * std::log10(std::cos(radians(theta_deg)));
}

double quantization_loss_db(int bits) {
  if (bits < 1) throw std::domain_error("quantization_loss_db: bits must be >= 1");
  const double x = std::numbers::pi * std::exp2(static_cast<double>(-bits));
  return -20.0 * std::log10(std::sin(x) / x);
}

double quantization_loss_db(PhaseBits bits) {
  return bits ? quantization_loss_db(*bits) : 0.0;
}

PeakDirection peak_direction(const RadiationPattern& pattern) {
  if (pattern.samples.empty()) throw std::domain_error("peak_direction: empty pattern");
  size_t best = 0;
  double lo = pattern.samples[0].gain_db;
  double hi = pattern.samples[0].gain_db;
  for (size_t i = 1; i < pattern.samples.size(); ++i) {
    const double g = pattern.samples[i].gain_db;
    lo = std::min(lo, g);
    hi = std::max(hi, g);
    if (g > pattern.samples[best].gain_db) best = i;
  }
  if (hi - lo <= 1e-12) {
    return PeakDirection{pattern.samples[best].theta_deg, true};
  }
  PeakDirection peak{pattern.samples[best].theta_deg, false};
  if (best > 0 && best + 1 < pattern.samples.size()) {
    // quadratic vertex through the three samples (grid may be non-uniform)
    const double x1 = pattern.samples[best - 1].theta_deg, y1 = pattern.samples[best - 1].gain_db;
    const double x2 = pattern.samples[best].theta_deg, y2 = pattern.samples[best].gain_db;
    const double x3 = pattern.samples[best + 1].theta_deg, y3 = pattern.samples[best + 1].gain_db;
    const double d21 = x2 - x1, d23 = x2 - x3;
    const double num = d21 * d21 * (y2 - y3) - d23 * d23 * (y2 - y1);
    const double den = d21 * (y2 - y3) - d23 * (y2 - y1);
    if (std::abs(den) > 1e-300) {
      const double vertex = x2 - 0.5 * num / den;
      if (vertex > x1 && vertex < x3) peak.theta_deg = vertex;
    }
  }
  return peak;
}

double broadside_hpbw_deg(const ApertureDesign& a, Frequency f) {
  check_aperture(a);
  PhaseProfile uniform;
  uniform.cells_per_side = a.cells_per_side;
  uniform.phase_rad.assign(static_cast<size_t>(a.cells_per_side) * a.cells_per_side, 0.0);
  const PatternEvaluator eval(a, uniform, SteeringTarget{}, 0.0);
  const double ref = eval.gain_db(f, 0.0);

  // start well inside the main lobe whatever the aperture size
  const double rough_deg =
      degrees(0.886 * wavelength_m(f) / a.physical_side_m());
  double outside = std::min(rough_deg / 10.0, 10.0);
  while (eval.gain_db(f, outside) > ref - half_power_db) {
    outside *= 1.4;
    if (outside >= 89.9) return 2.0 * 89.9;  // wider than the visible half-space
  }
  double inside = outside / 1.4;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (inside + outside);
    if (eval.gain_db(f, mid) > ref - half_power_db) {
      inside = mid;
    } else {
      outside = mid;
    }
  }
  return inside + outside;  // 2 * crossing
}

std::optional<double> squint_bandwidth_numeric(const ApertureDesign& a, const SteeringTarget& t,
                                               Frequency f0, SquintEdgeRule rule) {
  check_aperture(a);
  check_target(t);
  if (!(f0.hz > 0.0)) throw std::domain_error("squint_bandwidth_numeric: f0 must be positive");
  const double theta0 = t.outgoing.theta_deg;
  if (theta0 == 0.0) return std::nullopt;  // broadside beam does not squint

  PhaseProfile prof = synthesize_profile(a, t);
  if (a.phase_bits) prof = quantize_profile(prof, *a.phase_bits);
  const PatternEvaluator eval(a, prof, t, t.outgoing.phi_deg);

  std::function<bool(double)> inside;
  if (rule == SquintEdgeRule::gain_at_design_direction) {
    const double ref = eval.gain_db(f0, theta0);
    inside = [&eval, theta0, ref](double f) {
      return eval.gain_db(Frequency{f}, theta0) >= ref - half_power_db;
    };
  } else {
    const double budget_deg = 0.5 * broadside_hpbw_deg(a, f0);
    const double u0 = std::sin(radians(theta0));
    const double hpbw = 2.0 * budget_deg;
    inside = [&eval, f0, u0, theta0, budget_deg, hpbw](double f) {
      const double s = f0.hz / f * u0;
      if (s >= 0.9999) return false;  // beam squinted past endfire
      const double predicted = degrees(std::asin(s));
      const double span = std::min(1.5 * hpbw / std::max(std::cos(radians(predicted)), 0.05), 30.0);
      const double peak = measure_peak_deg(eval, Frequency{f}, predicted, span);
      return std::abs(peak - theta0) <= budget_deg;
    };
  }

  const double step = f0.hz / 512.0;
  const double limit = 0.5 * f0.hz;
  double edge[2];
  for (int side = 0; side < 2; ++side) {
    const double sgn = side == 0 ? -1.0 : 1.0;
    double last_inside = f0.hz;
    double probe = f0.hz + sgn * step;
    while (inside(probe)) {
      last_inside = probe;
      probe += sgn * step;
      if (std::abs(probe - f0.hz) > limit) {
        throw SolverError("squint_bandwidth_numeric: no half-power band edge " +
                          std::string(side == 0 ? "below" : "above") + " f0 within the +/-50% bracket [" +
                          std::to_string(0.5 * f0.hz * 1e-9) + ", " +
                          std::to_string(1.5 * f0.hz * 1e-9) + "] GHz");
      }
    }
    double out = probe;
    while (std::abs(out - last_inside) > 1e6) {
      const double mid = 0.5 * (out + last_inside);
      if (inside(mid)) {
        last_inside = mid;
      } else {
        out = mid;
      }
    }
    edge[side] = 0.5 * (out + last_inside);
  }
  return edge[1] - edge[0];
}

double squint_bandwidth_analytic(double panel_side_m, double theta_deg, Frequency f0, double beta) {
  if (!(panel_side_m > 0.0)) throw std::domain_error("squint_bandwidth_analytic: panel side must be positive");
  if (!(theta_deg > 0.0 && theta_deg < 90.0)) {
    throw std::domain_error("squint_bandwidth_analytic: theta_deg must be in (0, 90), got " +
                            std::to_string(theta_deg));
  }
  if (!(f0.hz > 0.0)) throw std::domain_error("squint_bandwidth_analytic: f0 must be positive");
  if (!(beta > 0.0)) throw std::domain_error("squint_bandwidth_analytic: beta must be positive");
  return beta * speed_of_light_m_s / (panel_side_m * std::tan(radians(theta_deg)));
}

void write_pattern_csv(std::ostream& os, const RadiationPattern& pattern) {
  os << "theta_deg,gain_db\n";
  char line[80];
  for (const auto& s : pattern.samples) {
    std::snprintf(line, sizeof line, "%.9g,%.9g\n", s.theta_deg, s.gain_db);
    os << line;
  }
}

}  // namespace risplan
