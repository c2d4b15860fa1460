#pragma once

#include "risplan/units.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace risplan {

/// Number of per-cell phase states is 2^bits; std::nullopt means continuous
/// (unquantized) phase control.
using PhaseBits = std::optional<int>;

/// Direction given as (theta, phi) in degrees, theta measured from the panel
/// normal. For an incident wave the angles name the direction the wave
/// arrives from; for an outgoing wave the direction it leaves toward.
struct PlaneWaveDir {
  double theta_deg = 0.0;
  double phi_deg = 0.0;

  friend bool operator==(const PlaneWaveDir&, const PlaneWaveDir&) = default;
};

/// Point source in front of the panel. The panel lies in the z = 0 plane,
/// centered at the origin; z > 0 is in front.
struct PointSource {
  double x_m = 0.0;
  double y_m = 0.0;
  double z_m = 1.0;

  friend bool operator==(const PointSource&, const PointSource&) = default;
};

struct SteeringTarget {
  std::variant<PlaneWaveDir, PointSource> incident = PlaneWaveDir{};
  PlaneWaveDir outgoing;

  friend bool operator==(const SteeringTarget&, const SteeringTarget&) = default;
};

/// Square grid of switch-controlled unit cells.
struct ApertureDesign {
  Frequency design_frequency;
  int cells_per_side = 1;
  double cell_spacing_m = 0.0;
  PhaseBits phase_bits{};  // continuous when unset

  double physical_side_m() const { return cells_per_side * cell_spacing_m; }

  friend bool operator==(const ApertureDesign&, const ApertureDesign&) = default;
};

/// Grid sized for a requested panel side at half-wavelength spacing. The cell
/// count is rounded to nearest (ties up). Throws std::domain_error when the
/// side is smaller than one cell.
ApertureDesign build_grid(double panel_side_m, Frequency f, PhaseBits phase_bits = {});

/// Per-cell reflection phases in [0, 2*pi), row-major over (row, col).
struct PhaseProfile {
  int cells_per_side = 0;
  std::vector<double> phase_rad;
  PhaseBits quantized_bits{};

  double at(int row, int col) const { return phase_rad[static_cast<size_t>(row) * cells_per_side + col]; }
};

/// Continuous phase profile that redirects the incident field of `t` into the
/// outgoing plane wave of `t`, computed at the design frequency.
PhaseProfile synthesize_profile(const ApertureDesign& a, const SteeringTarget& t);

/// Snaps every phase to the nearest of the 2^bits states {2*pi*k/2^bits},
/// using wrap-around distance; exact ties go to the smaller state index.
PhaseProfile quantize_profile(const PhaseProfile& p, int bits);

struct PatternSample {
  double theta_deg = 0.0;
  double gain_db = 0.0;
};

/// Sampled theta-cut of the aperture response at a fixed phi plane. Gains are
/// relative to the broadside peak of the same aperture with a uniform phase
/// profile under normal incidence (that reference is 0 dB).
struct RadiationPattern {
  Frequency frequency;
  double cut_phi_deg = 0.0;
  std::vector<PatternSample> samples;
};

/// Gain at a single observation angle; theta may be negative to address the
/// phi+180 half of the cut. Coherent sum over cells with a
/// sqrt(cos(theta_in)*cos(theta)) projection taper.
double pattern_gain_db(const ApertureDesign& a, const PhaseProfile& p, Frequency f,
                       const SteeringTarget& t, double theta_deg, double cut_phi_deg);

/// Pattern sampled over a strictly increasing theta grid (degrees). The cut
/// plane defaults to the outgoing phi of the target.
RadiationPattern radiation_pattern(const ApertureDesign& a, const PhaseProfile& p, Frequency f,
                                   const SteeringTarget& t, std::span<const double> theta_grid_deg);
RadiationPattern radiation_pattern(const ApertureDesign& a, const PhaseProfile& p, Frequency f,
                                   const SteeringTarget& t, std::span<const double> theta_grid_deg,
                                   double cut_phi_deg);

/// Projected-aperture loss -10*log10(cos(theta)). Valid for 0 <= theta < 90.
double scan_loss_db(double theta_deg);

/// Closed-form mean beam-peak loss of b-bit phase quantization:
/// -20*log10(sinc(pi/2^b)). Throws std::domain_error for bits < 1.
double quantization_loss_db(int bits);
/// Continuous resolution loses nothing.
double quantization_loss_db(PhaseBits bits);

struct PeakDirection {
  double theta_deg = 0.0;
  bool degenerate = false;  // all samples equal; theta is the first maximum
};

/// Direction of the pattern maximum, refined parabolically over the three
/// samples around the peak.
PeakDirection peak_direction(const RadiationPattern& pattern);

/// Measured half-power beamwidth of the uniform-phase broadside beam, degrees.
double broadside_hpbw_deg(const ApertureDesign& a, Frequency f);

/// Band-edge rule for the numeric squint solver.
///  - beam_pointing: edge where the squinted beam peak leaves the design
///    direction by more than half the broadside half-power beamwidth. This is
///    the classic squint bandwidth criterion and is the default.
///  - gain_at_design_direction: edge where the gain evaluated exactly at the
///    design direction first drops to half its design-frequency value. Decays
///    with the steered-aperture fill factor (D*sin(theta)) and therefore reads
///    wider than the pointing rule by roughly 1/cos(theta).
enum class SquintEdgeRule { beam_pointing, gain_at_design_direction };

inline constexpr double default_squint_beta = 1.13;

/// 3 dB squint-limited bandwidth of the aperture with its profile synthesized
/// (and quantized per the design) at f0 and then frozen. Edges are located by
/// bisection to 1 MHz inside a +/-50% bracket around f0; an edge outside the
/// bracket raises SolverError. Returns std::nullopt for a broadside target
/// (no squint, unbounded bandwidth).
std::optional<double> squint_bandwidth_numeric(const ApertureDesign& a, const SteeringTarget& t,
                                               Frequency f0,
                                               SquintEdgeRule rule = SquintEdgeRule::beam_pointing);

/// Closed-form squint bandwidth beta*c/(D*tan(theta)).
double squint_bandwidth_analytic(double panel_side_m, double theta_deg, Frequency f0,
                                 double beta = default_squint_beta);

/// CSV with header "theta_deg,gain_db", one row per sample, 9 significant digits.
void write_pattern_csv(std::ostream& os, const RadiationPattern& pattern);

}  // namespace risplan
