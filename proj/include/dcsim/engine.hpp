#pragma once

#include "dcsim/config.hpp"
#include "dcsim/power_chain.hpp"
#include "dcsim/profiles.hpp"

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace dcsim {

enum class Component : std::size_t {
    ServerFarm,
    PduLoss,
    UpsLoss,
    Chiller,
    Crah,
    Crac,
    Pumps,
    Misc,
};

inline constexpr std::size_t kComponentCount = 8;

/// Column-style name (`server_farm`, `pdu_loss`, ...).
std::string_view to_string(Component c);

using ComponentValues = std::array<double, kComponentCount>;

/// Power of every component at one instant, in W. `total_w` is the sum of
/// the components; components that do not exist in the active architecture
/// are zero.
struct PowerBreakdown {
    double server_farm_w = 0.0;
    double pdu_loss_w = 0.0;
    double ups_loss_w = 0.0;
    double chiller_w = 0.0;
    double crah_w = 0.0;
    double crac_w = 0.0;
    double pumps_w = 0.0;
    double misc_w = 0.0;
    double total_w = 0.0;

    ComponentValues components() const;
    double get(Component c) const { return components()[static_cast<std::size_t>(c)]; }

    double supply_loss_w() const { return pdu_loss_w + ups_loss_w; }
    /// Chiller, air handlers, CRAC and pumps.
    double cooling_w() const { return chiller_w + crah_w + crac_w + pumps_w; }
};

/// Quantities fixed by the peak operating point (U = 1 at the reference
/// ambient). Miscellaneous load is constant at misc_fraction * total_peak.
struct PeakContext {
    double farm_peak_w = 0.0;
    double total_peak_w = 0.0;
    double misc_constant_w = 0.0;
    /// Pump fraction actually applied: zero unless the architecture has a
    /// chilled-water loop.
    double pump_fraction = 0.0;
    SupplyChainSpec supply;
};

PeakContext peak_context(const ScenarioConfig& scenario);

PowerBreakdown step_power(double utilisation, double ambient_c, const ScenarioConfig& scenario,
                          const PeakContext& ctx);

struct SimulationStep {
    Timestamp time;
    double utilisation = 0.0;
    double ambient_c = 0.0;
    PowerBreakdown power;
};

struct EnergySummary {
    ComponentValues energy_wh{};
    double total_wh = 0.0;
    ComponentValues shares{};

    double share(Component c) const { return shares[static_cast<std::size_t>(c)]; }
    double energy(Component c) const { return energy_wh[static_cast<std::size_t>(c)]; }
    double cooling_wh() const;
    double cooling_share() const { return cooling_wh() / total_wh; }
};

struct SimulationResult {
    std::vector<SimulationStep> steps;
    EnergySummary energy;
};

/// One steady-state step per hour. Profiles must be the same length with
/// identical timestamps.
SimulationResult simulate(const UtilisationProfile& utilisation, const AmbientProfile& ambient,
                          const ScenarioConfig& scenario);

/// Energy per component (each step lasts one hour) and fractional shares.
EnergySummary summarize_energy(std::span<const SimulationStep> steps);
inline EnergySummary summarize_energy(const SimulationResult& result) { return summarize_energy(result.steps); }

/// Fraction of `breakdown.total_w` drawn by each component.
ComponentValues shares(const PowerBreakdown& breakdown);

}  // namespace dcsim
