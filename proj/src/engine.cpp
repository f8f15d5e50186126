#include "dcsim/engine.hpp"

#include "dcsim/cooling.hpp"
#include "dcsim/error.hpp"
#include "dcsim/server_farm.hpp"

#include <fmt/format.h>

namespace dcsim {

std::string_view to_string(Component c) {
    switch (c) {
    case Component::ServerFarm: return "server_farm";
    case Component::PduLoss: return "pdu_loss";
    case Component::UpsLoss: return "ups_loss";
    case Component::Chiller: return "chiller";
    case Component::Crah: return "crah";
    case Component::Crac: return "crac";
    case Component::Pumps: return "pumps";
    case Component::Misc: return "misc";
    }
    return "unknown";
}

ComponentValues PowerBreakdown::components() const {
    return {server_farm_w, pdu_loss_w, ups_loss_w, chiller_w, crah_w, crac_w, pumps_w, misc_w};
}

double EnergySummary::cooling_wh() const {
    return energy(Component::Chiller) + energy(Component::Crah) + energy(Component::Crac) +
           energy(Component::Pumps);
}

namespace {

bool has_chilled_water_loop(CoolingArchitecture arch) { return arch == CoolingArchitecture::ChilledWaterCrah; }

struct CoolingPower {
    double chiller_w = 0.0;
    double crah_w = 0.0;
    double crac_w = 0.0;
};

CoolingPower cooling_power(double utilisation, double ambient_c, const ScenarioConfig& s, double farm_peak_w) {
    CoolingPower p;
    switch (s.architecture) {
    case CoolingArchitecture::ChilledWaterCrah:
        p.chiller_w = chiller_power(utilisation, farm_peak_w, s.chiller) *
                      ambient_adjustment(ambient_c, s.reference_ambient_c, s.eer);
        p.crah_w = crah_power(utilisation, farm_peak_w, s.crah);
        break;
    case CoolingArchitecture::CracDx:
        p.crac_w = crac_power(utilisation, farm_peak_w, s.crac, s.crah,
                              ambient_adjustment(ambient_c, s.reference_ambient_c, s.eer));
        break;
    case CoolingArchitecture::FreeAir:
        p.crah_w = crah_power(utilisation, farm_peak_w, s.crah);
        break;
    }
    return p;
}

void check_fractions(const ScenarioConfig& s) {
    if (!(s.pump_fraction >= 0.0 && s.misc_fraction >= 0.0) || !(s.pump_fraction + s.misc_fraction < 1.0)) {
        throw Error(ErrorKind::InvalidFractions,
                    fmt::format("pump_fraction ({}) + misc_fraction ({}) must be in [0, 1)", s.pump_fraction,
                                s.misc_fraction));
    }
}

}  // namespace

PeakContext peak_context(const ScenarioConfig& scenario) {
    check_fractions(scenario);
    validate(scenario);

    PeakContext ctx;
    ctx.farm_peak_w = scenario.server.farm_peak_w();
    ctx.supply = calibrate_supply(scenario.supply, ctx.farm_peak_w);
    ctx.pump_fraction = has_chilled_water_loop(scenario.architecture) ? scenario.pump_fraction : 0.0;

    const double farm_w = farm_power(1.0, scenario.consolidation, scenario.server);
    const SupplyLoss loss = supply_loss(farm_w, ctx.supply);
    const CoolingPower cooling = cooling_power(1.0, scenario.reference_ambient_c, scenario, ctx.farm_peak_w);
    const double fixed_w = farm_w + loss.pdu_loss_w + loss.ups_loss_w + cooling.chiller_w + cooling.crah_w +
                           cooling.crac_w;

    // total = fixed + pumps + misc with pumps = phi * total, misc = mu * total.
    ctx.total_peak_w = fixed_w / (1.0 - ctx.pump_fraction - scenario.misc_fraction);
    ctx.misc_constant_w = scenario.misc_fraction * ctx.total_peak_w;
    return ctx;
}

PowerBreakdown step_power(double utilisation, double ambient_c, const ScenarioConfig& scenario,
                          const PeakContext& ctx) {
    if (!(utilisation >= 0.0 && utilisation <= 1.0)) {
        throw Error(ErrorKind::OutOfRange, fmt::format("utilisation {} outside [0, 1]", utilisation));
    }
    PowerBreakdown b;
    b.server_farm_w = farm_power(utilisation, scenario.consolidation, scenario.server);
    const SupplyLoss loss = supply_loss(b.server_farm_w, ctx.supply);
    b.pdu_loss_w = loss.pdu_loss_w;
    b.ups_loss_w = loss.ups_loss_w;
    const CoolingPower cooling = cooling_power(utilisation, ambient_c, scenario, ctx.farm_peak_w);
    b.chiller_w = cooling.chiller_w;
    b.crah_w = cooling.crah_w;
    b.crac_w = cooling.crac_w;
    b.misc_w = ctx.misc_constant_w;

    const double without_pumps = b.server_farm_w + b.pdu_loss_w + b.ups_loss_w + b.chiller_w + b.crah_w +
                                 b.crac_w + b.misc_w;
    b.pumps_w = ctx.pump_fraction * without_pumps / (1.0 - ctx.pump_fraction);
    for (double v : b.components()) {
        b.total_w += v;
    }
    return b;
}

SimulationResult simulate(const UtilisationProfile& utilisation, const AmbientProfile& ambient,
                          const ScenarioConfig& scenario) {
    validate(utilisation);
    validate(ambient);
    if (utilisation.entries.size() != ambient.entries.size()) {
        throw Error(ErrorKind::ProfileMismatch,
                    fmt::format("utilisation has {} hours but weather has {}", utilisation.entries.size(),
                                ambient.entries.size()));
    }
    for (std::size_t i = 0; i < utilisation.entries.size(); ++i) {
        if (utilisation.entries[i].time != ambient.entries[i].time) {
            throw Error(ErrorKind::ProfileMismatch,
                        fmt::format("row {}: utilisation at {} but weather at {}", i + 1,
                                    format_timestamp(utilisation.entries[i].time),
                                    format_timestamp(ambient.entries[i].time)));
        }
    }

    const PeakContext ctx = peak_context(scenario);
    SimulationResult result;
    result.steps.reserve(utilisation.entries.size());
    for (std::size_t i = 0; i < utilisation.entries.size(); ++i) {
        const double u = utilisation.entries[i].utilisation;
        const double t = ambient.entries[i].temperature_c;
        result.steps.push_back({utilisation.entries[i].time, u, t, step_power(u, t, scenario, ctx)});
    }
    result.energy = summarize_energy(result.steps);
    return result;
}

EnergySummary summarize_energy(std::span<const SimulationStep> steps) {
    if (steps.empty()) {
        throw Error(ErrorKind::EmptyResult, "no simulation steps to summarise");
    }
    EnergySummary summary;
    for (const auto& step : steps) {
        const ComponentValues values = step.power.components();
        for (std::size_t c = 0; c < kComponentCount; ++c) {
            summary.energy_wh[c] += values[c];  // W x 1 h
        }
    }
    for (double e : summary.energy_wh) {
        summary.total_wh += e;
    }
    if (!(summary.total_wh > 0.0)) {
        throw Error(ErrorKind::InvariantViolation, "total energy is zero; shares are undefined");
    }
    for (std::size_t c = 0; c < kComponentCount; ++c) {
        summary.shares[c] = summary.energy_wh[c] / summary.total_wh;
    }
    return summary;
}

ComponentValues shares(const PowerBreakdown& breakdown) {
    if (!(breakdown.total_w > 0.0)) {
        throw Error(ErrorKind::InvariantViolation, "total power is zero; shares are undefined");
    }
    ComponentValues out = breakdown.components();
    for (double& v : out) {
        v /= breakdown.total_w;
    }
    return out;
}

}  // namespace dcsim
