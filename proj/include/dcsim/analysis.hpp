#pragma once

#include "dcsim/config.hpp"
#include "dcsim/engine.hpp"
#include "dcsim/profiles.hpp"

#include <span>
#include <vector>

namespace dcsim {

/// Utilisation that brings total power down (or up) to a target at a given
/// ambient temperature. When the target lies outside the reachable range the
/// nearest bound is reported with `feasible = false`.
struct CurtailmentSolution {
    double target_total_w = 0.0;
    double required_utilisation = 0.0;
    double achieved_total_w = 0.0;
    bool feasible = false;
    int iterations = 0;
};

inline constexpr int kMaxBisectionIterations = 64;

CurtailmentSolution curtail(double target_total_w, double ambient_c, const ScenarioConfig& scenario,
                            const PeakContext& ctx);

/// Component shares of total power at U = 1 and the reference ambient.
ComponentValues peak_breakdown(const ScenarioConfig& scenario);

struct CurvePoint {
    double utilisation = 0.0;
    double total_w = 0.0;
};

struct PowerCurve {
    double temperature_c = 0.0;
    std::vector<CurvePoint> points;
};

/// Total power over an evenly spaced utilisation grid on [0, 1], one curve
/// per temperature.
std::vector<PowerCurve> power_curve(std::span<const double> temperatures_c, const ScenarioConfig& scenario,
                                    int n_points);

struct ArchitectureComparison {
    CoolingArchitecture baseline = CoolingArchitecture::ChilledWaterCrah;
    CoolingArchitecture alternative = CoolingArchitecture::CracDx;
    std::vector<Timestamp> times;
    std::vector<double> baseline_cooling_w;
    std::vector<double> alternative_cooling_w;
    double baseline_cooling_wh = 0.0;
    double alternative_cooling_wh = 0.0;
    /// alternative / baseline - 1, on cooling energy.
    double relative_increase = 0.0;
};

/// Runs the same profiles under two cooling architectures and compares the
/// cooling power (chiller + CRAH + CRAC + pumps) step by step.
ArchitectureComparison compare_architectures(const UtilisationProfile& utilisation, const AmbientProfile& ambient,
                                             const ScenarioConfig& scenario,
                                             CoolingArchitecture baseline = CoolingArchitecture::ChilledWaterCrah,
                                             CoolingArchitecture alternative = CoolingArchitecture::CracDx);

}  // namespace dcsim
