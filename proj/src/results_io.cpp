#include "dcsim/results_io.hpp"

#include "dcsim/error.hpp"
#include "dcsim/profiles.hpp"

#include <fmt/format.h>

namespace dcsim {

std::string write_results_csv(const SimulationResult& result) {
    if (result.steps.empty()) {
        throw Error(ErrorKind::EmptyResult, "no simulation steps to write");
    }
    std::string out{kResultsHeader};
    out += '\n';
    for (const auto& step : result.steps) {
        out += format_timestamp(step.time);
        out += ',';
        out += format_number(step.utilisation);
        out += ',';
        out += format_number(step.ambient_c);
        for (double v : step.power.components()) {
            out += ',';
            out += format_number(v);
        }
        out += ',';
        out += format_number(step.power.total_w);
        out += '\n';
    }
    return out;
}

std::string write_curve_csv(const std::vector<PowerCurve>& curves) {
    std::string out = "temperature_c,utilisation,total_w\n";
    for (const auto& curve : curves) {
        for (const auto& p : curve.points) {
            out += fmt::format("{},{},{}\n", format_number(curve.temperature_c), format_number(p.utilisation),
                               format_number(p.total_w));
        }
    }
    return out;
}

std::string write_comparison_csv(const ArchitectureComparison& cmp) {
    std::string out = fmt::format("timestamp,{}_cooling_w,{}_cooling_w\n", to_string(cmp.baseline),
                                  to_string(cmp.alternative));
    for (std::size_t i = 0; i < cmp.times.size(); ++i) {
        out += fmt::format("{},{},{}\n", format_timestamp(cmp.times[i]), format_number(cmp.baseline_cooling_w[i]),
                           format_number(cmp.alternative_cooling_w[i]));
    }
    return out;
}

UtilisationProfile utilisation_of(const SimulationResult& result) {
    UtilisationProfile profile;
    profile.entries.reserve(result.steps.size());
    for (const auto& step : result.steps) {
        profile.entries.push_back({step.time, step.utilisation});
    }
    return profile;
}

AmbientProfile ambient_of(const SimulationResult& result) {
    AmbientProfile profile;
    profile.entries.reserve(result.steps.size());
    for (const auto& step : result.steps) {
        profile.entries.push_back({step.time, step.ambient_c});
    }
    return profile;
}

}  // namespace dcsim
