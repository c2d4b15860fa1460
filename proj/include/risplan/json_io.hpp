#pragma once

#include "risplan/link_budget.hpp"
#include "risplan/switch_catalog.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace risplan {

// Ordered maps keep emitted files byte-stable for identical inputs.
using json = nlohmann::ordered_json;

/// Emitted JSON numbers carry 9 significant digits; rounding happens only at
/// serialization, never inside computations. Also makes parse(serialize(x))
/// a fixed point.
double round_sig9(double v);

json scenario_to_json(const ScenarioSpec& s);

/// Accepts either an explicit d1_m/d2_m pair or a total range_m split evenly.
/// Throws ValidationError naming any missing or ill-typed field.
ScenarioSpec scenario_from_json(const json& j);

/// Flat report object: requirement fields with units in the key names, the
/// bandwidth method tag, and an echo of the scenario that produced it.
json report_to_json(const RisRequirementsReport& report, const ScenarioSpec& scenario);

const char* to_string(BandwidthMethod method);
BandwidthMethod bandwidth_method_from_string(const std::string& name);

/// Catalog array mirroring SwitchTechnology; unknown figures serialize as
/// nulls next to their reason notes.
json catalog_to_json(const std::vector<SwitchTechnology>& catalog);
std::vector<SwitchTechnology> catalog_from_json(const json& j);

/// Catalog plus the derived cutoff-frequency figure of merit (for display;
/// not parsed back).
json techs_table_json(const std::vector<SwitchTechnology>& catalog);

/// Per-technology static power and reconfiguration energy for a panel of
/// switch_count switches, sorted by static power ascending.
json power_table_json(std::int64_t switch_count, const std::vector<SwitchTechnology>& catalog,
                      double on_fraction = 1.0);

}  // namespace risplan
