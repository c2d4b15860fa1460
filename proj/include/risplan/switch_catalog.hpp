#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace risplan {

/// Closed interval for quantities the sources only bound. A point value is a
/// degenerate interval.
struct ValueRange {
  double lo = 0.0;
  double hi = 0.0;

  static ValueRange point(double v) { return {v, v}; }
  bool is_point() const { return lo == hi; }

  friend bool operator==(const ValueRange&, const ValueRange&) = default;
};

ValueRange scaled(const ValueRange& r, double factor);

/// One switching technology. Unknown figures are nullopt and carry a short
/// note explaining why; they are never silently zero. "< x" bounds are
/// encoded as [0, x].
struct SwitchTechnology {
  std::string name;
  double max_demonstrated_freq_hz = 0.0;
  std::optional<ValueRange> ron_coff_s;
  std::string ron_coff_note;
  ValueRange dc_dissipation_w;  // {0, 0} for technologies with no static draw
  std::optional<ValueRange> switching_energy_j;
  std::string switching_energy_note;
  ValueRange trl;  // within [1, 9]
  int size_score = 1;              // ordinal 1..3, larger is more compact
  int cmos_integration_score = 1;  // ordinal 1..3

  friend bool operator==(const SwitchTechnology&, const SwitchTechnology&) = default;
};

/// The six benchmarked technologies with their published figures.
const std::vector<SwitchTechnology>& builtin_catalog();

/// Switch figure of merit F_C = 1/(2*pi*Ron*Coff).
/// Throws std::domain_error for ron_coff <= 0.
double cutoff_frequency_hz(double ron_coff_s);

/// F_C range for a catalog record; nullopt when Ron*Coff is unknown. A zero
/// lower Ron*Coff bound maps to an unbounded (infinite) upper F_C.
std::optional<ValueRange> cutoff_frequency_hz(const SwitchTechnology& tech);

/// Idle DC dissipation of a panel: switch_count * on_fraction * per-switch
/// draw. Watts. Zero-dissipation technologies return exactly {0, 0}.
ValueRange static_power_w(std::int64_t switch_count, const SwitchTechnology& tech,
                          double on_fraction = 1.0);

/// Worst-case energy to reprogram the whole panel (every switch toggles).
/// nullopt when the per-switch energy is unknown.
std::optional<ValueRange> reconfiguration_energy_j(std::int64_t switch_count,
                                                   const SwitchTechnology& tech);
ValueRange reconfiguration_energy_j(std::int64_t switch_count, double energy_per_switch_j);

/// Compares against the optimistic (upper) TRL bound.
bool meets_trl(const SwitchTechnology& tech, int min_trl);

/// User records override builtin ones by name; unmatched names are appended.
std::vector<SwitchTechnology> merge_catalogs(std::vector<SwitchTechnology> base,
                                             const std::vector<SwitchTechnology>& overrides);

}  // namespace risplan
