#include "risplan/switch_catalog.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace risplan {

namespace {

constexpr double fs = 1e-15;
constexpr double mw = 1e-3;
constexpr double nj = 1e-9;

SwitchTechnology make(std::string name, double max_freq_ghz, std::optional<ValueRange> ron_coff,
                      std::string ron_note, ValueRange dc, std::optional<ValueRange> energy,
                      std::string energy_note, ValueRange trl, int size_score, int cmos_score) {
  SwitchTechnology t;
  t.name = std::move(name);
  t.max_demonstrated_freq_hz = max_freq_ghz * 1e9;
  t.ron_coff_s = ron_coff;
  t.ron_coff_note = std::move(ron_note);
  t.dc_dissipation_w = dc;
  t.switching_energy_j = energy;
  t.switching_energy_note = std::move(energy_note);
  t.trl = trl;
  t.size_score = size_score;
  t.cmos_integration_score = cmos_score;
  return t;
}

void check_range(const ValueRange& r, const char* what) {
  if (!(r.lo <= r.hi)) throw std::domain_error(std::string(what) + ": range min must not exceed max");
}

}  // namespace

ValueRange scaled(const ValueRange& r, double factor) {
  check_range(r, "scaled");
  if (!(factor >= 0.0)) throw std::domain_error("scaled: factor must be >= 0");
  return {r.lo * factor, r.hi * factor};
}

const std::vector<SwitchTechnology>& builtin_catalog() {
  static const std::vector<SwitchTechnology> catalog = {
      make("RF-SOI", 220.0, ValueRange::point(90.0 * fs), "",
           {0.05 * mw, 0.1 * mw}, std::nullopt,
           "not listed; DC dissipation is not negligible", {9, 9}, 2, 3),
      make("BiCMOS", 133.0, ValueRange::point(80.0 * fs), "",
           {10.0 * mw, 50.0 * mw}, std::nullopt,
           "not listed; DC dissipation is not negligible", {8, 8}, 2, 3),
      make("GaN-on-Si", 40.0, ValueRange::point(55.0 * fs), "",
           {0.1 * mw, 1.0 * mw}, std::nullopt,
           "not listed; DC dissipation is not negligible", {6, 6}, 1, 2),
      make("Microfluidics", 123.0, std::nullopt, "TBD in source data",
           ValueRange::point(0.001 * mw), ValueRange::point(20.0 * nj), "", {1, 3}, 1, 1),
      make("Memristors", 480.0, ValueRange{0.0, 10.0 * fs}, "published bound: < 10 fs",
           {0.0, 0.0}, ValueRange{1.0 * nj, 10.0 * nj}, "", {2, 2}, 3, 1),
      make("PCM", 67.0, ValueRange{0.0, 10.0 * fs}, "published bound: < 10 fs",
           {0.0, 0.0}, ValueRange{1.0 * nj, 500.0 * nj}, "", {4, 4}, 3, 2),
  };
  return catalog;
}

double cutoff_frequency_hz(double ron_coff_s) {
  if (!(ron_coff_s > 0.0)) {
    throw std::domain_error("cutoff_frequency_hz: Ron*Coff must be positive, got " +
                            std::to_string(ron_coff_s));
  }
  return 1.0 / (2.0 * std::numbers::pi * ron_coff_s);
}

std::optional<ValueRange> cutoff_frequency_hz(const SwitchTechnology& tech) {
  if (!tech.ron_coff_s) return std::nullopt;
  check_range(*tech.ron_coff_s, "cutoff_frequency_hz");
  const double lo_fc = cutoff_frequency_hz(tech.ron_coff_s->hi);
  const double hi_fc = tech.ron_coff_s->lo > 0.0
                           ? cutoff_frequency_hz(tech.ron_coff_s->lo)
                           : std::numeric_limits<double>::infinity();
  return ValueRange{lo_fc, hi_fc};
}

ValueRange static_power_w(std::int64_t switch_count, const SwitchTechnology& tech,
                          double on_fraction) {
  if (switch_count < 0) throw std::domain_error("static_power_w: switch_count must be >= 0");
  if (!(on_fraction >= 0.0 && on_fraction <= 1.0)) {
    throw std::domain_error("static_power_w: on_fraction must be in [0, 1]");
  }
  check_range(tech.dc_dissipation_w, "static_power_w");
  return scaled(tech.dc_dissipation_w, static_cast<double>(switch_count) * on_fraction);
}

std::optional<ValueRange> reconfiguration_energy_j(std::int64_t switch_count,
                                                   const SwitchTechnology& tech) {
  if (switch_count < 0) throw std::domain_error("reconfiguration_energy_j: switch_count must be >= 0");
  if (!tech.switching_energy_j) return std::nullopt;
  check_range(*tech.switching_energy_j, "reconfiguration_energy_j");
  return scaled(*tech.switching_energy_j, static_cast<double>(switch_count));
}

ValueRange reconfiguration_energy_j(std::int64_t switch_count, double energy_per_switch_j) {
  if (switch_count < 0) throw std::domain_error("reconfiguration_energy_j: switch_count must be >= 0");
  if (!(energy_per_switch_j >= 0.0)) {
    throw std::domain_error("reconfiguration_energy_j: per-switch energy must be >= 0");
  }
  return ValueRange::point(static_cast<double>(switch_count) * energy_per_switch_j);
}

bool meets_trl(const SwitchTechnology& tech, int min_trl) {
  return tech.trl.hi >= static_cast<double>(min_trl);
}

std::vector<SwitchTechnology> merge_catalogs(std::vector<SwitchTechnology> base,
                                             const std::vector<SwitchTechnology>& overrides) {
  for (const auto& user : overrides) {
    bool replaced = false;
    for (auto& entry : base) {
      if (entry.name == user.name) {
        entry = user;
        replaced = true;
        break;
      }
    }
    if (!replaced) base.push_back(user);
  }
  return base;
}

}  // namespace risplan
