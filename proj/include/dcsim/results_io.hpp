#pragma once

#include "dcsim/analysis.hpp"
#include "dcsim/engine.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace dcsim {

/// Column order of the results CSV.
inline constexpr std::string_view kResultsHeader =
    "timestamp,utilisation,ambient_c,server_farm_w,pdu_loss_w,ups_loss_w,chiller_w,crah_w,crac_w,pumps_w,misc_w,"
    "total_w";

/// One row per step; throws EmptyResult when there are no steps.
std::string write_results_csv(const SimulationResult& result);

/// `temperature_c,utilisation,total_w`, curves one after another.
std::string write_curve_csv(const std::vector<PowerCurve>& curves);

/// `timestamp,<baseline>_cooling_w,<alternative>_cooling_w`.
std::string write_comparison_csv(const ArchitectureComparison& comparison);

/// Recover the input profiles from a result.
UtilisationProfile utilisation_of(const SimulationResult& result);
AmbientProfile ambient_of(const SimulationResult& result);

// SVG renderings. Layout is not stable between versions; only
// well-formedness is.
std::string results_svg(const SimulationResult& result);
std::string curves_svg(const std::vector<PowerCurve>& curves);
std::string comparison_svg(const ArchitectureComparison& comparison);

}  // namespace dcsim
