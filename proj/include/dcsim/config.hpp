#pragma once

#include "dcsim/cooling.hpp"
#include "dcsim/power_chain.hpp"
#include "dcsim/server_farm.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace dcsim {

enum class CoolingArchitecture {
    ChilledWaterCrah,  // chiller plant + CRAH units + chilled-water pumps
    CracDx,            // direct-expansion CRAC units, no chiller
    FreeAir,           // outside-air economiser, CRAH fans only
};

std::string_view to_string(CoolingArchitecture arch);
std::optional<CoolingArchitecture> parse_architecture(std::string_view name);

/// Complete description of a data centre. All cooling specs are always
/// present (defaulted when absent from the config file) so one scenario can
/// be evaluated under every architecture.
struct ScenarioConfig {
    ServerSpec server;
    double consolidation = 1.0;
    SupplyTargets supply;
    CoolingArchitecture architecture = CoolingArchitecture::ChilledWaterCrah;
    ChillerSpec chiller;
    CrahSpec crah;
    CracSpec crac;
    EerTable eer = EerTable::standard();
    double pump_fraction = 0.04;
    double misc_fraction = 0.06;
    double reference_ambient_c = 30.0;
};

void validate(const ScenarioConfig& scenario);

/// 40,000 servers at 120 W idle / 250 W peak, chilled water + CRAH.
ScenarioConfig case_study_scenario();

/// Parses the flat `key=value` format. Blank lines and `#` comments are
/// ignored; unknown or repeated keys are rejected. `server.count`,
/// `server.p_idle_w`, `server.p_peak_w` and `architecture` are required.
ScenarioConfig parse_scenario_config(std::string_view text);

/// Inverse of parse_scenario_config (keys in a fixed order).
std::string write_scenario_config(const ScenarioConfig& scenario);

}  // namespace dcsim
