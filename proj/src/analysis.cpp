#include "dcsim/analysis.hpp"

#include "dcsim/error.hpp"

#include <cmath>

#include <fmt/format.h>

namespace dcsim {

CurtailmentSolution curtail(double target_total_w, double ambient_c, const ScenarioConfig& scenario,
                            const PeakContext& ctx) {
    if (std::isnan(target_total_w)) {
        throw Error(ErrorKind::OutOfRange, "curtailment target is NaN");
    }
    auto total_at = [&](double u) { return step_power(u, ambient_c, scenario, ctx).total_w; };

    CurtailmentSolution sol;
    sol.target_total_w = target_total_w;

    const double floor_w = total_at(0.0);
    const double ceiling_w = total_at(1.0);
    if (target_total_w < floor_w) {
        sol.required_utilisation = 0.0;
        sol.achieved_total_w = floor_w;
        return sol;
    }
    if (target_total_w > ceiling_w) {
        sol.required_utilisation = 1.0;
        sol.achieved_total_w = ceiling_w;
        return sol;
    }
    sol.feasible = true;
    if (target_total_w == ceiling_w) {
        sol.required_utilisation = 1.0;
        sol.achieved_total_w = ceiling_w;
        return sol;
    }
    if (target_total_w == floor_w) {
        sol.required_utilisation = 0.0;
        sol.achieved_total_w = floor_w;
        return sol;
    }

    // Total power is strictly increasing in U, so [lo, hi] always brackets
    // the target.
    double lo = 0.0;
    double hi = 1.0;
    double mid = 0.5;
    double mid_w = 0.0;
    for (sol.iterations = 1; sol.iterations <= kMaxBisectionIterations; ++sol.iterations) {
        mid = 0.5 * (lo + hi);
        mid_w = total_at(mid);
        if (mid_w == target_total_w || hi - lo <= 1e-12) {
            break;
        }
        if (mid_w < target_total_w) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    sol.iterations = std::min(sol.iterations, kMaxBisectionIterations);
    sol.required_utilisation = mid;
    sol.achieved_total_w = mid_w;
    return sol;
}

ComponentValues peak_breakdown(const ScenarioConfig& scenario) {
    const PeakContext ctx = peak_context(scenario);
    return shares(step_power(1.0, scenario.reference_ambient_c, scenario, ctx));
}

std::vector<PowerCurve> power_curve(std::span<const double> temperatures_c, const ScenarioConfig& scenario,
                                    int n_points) {
    if (n_points < 2) {
        throw Error(ErrorKind::OutOfRange, fmt::format("need at least 2 curve points, got {}", n_points));
    }
    const PeakContext ctx = peak_context(scenario);
    std::vector<PowerCurve> curves;
    curves.reserve(temperatures_c.size());
    for (double t : temperatures_c) {
        PowerCurve curve;
        curve.temperature_c = t;
        curve.points.reserve(static_cast<std::size_t>(n_points));
        for (int i = 0; i < n_points; ++i) {
            // Last point pinned to exactly 1.
            const double u = i + 1 == n_points ? 1.0 : static_cast<double>(i) / (n_points - 1);
            curve.points.push_back({u, step_power(u, t, scenario, ctx).total_w});
        }
        curves.push_back(std::move(curve));
    }
    return curves;
}

ArchitectureComparison compare_architectures(const UtilisationProfile& utilisation, const AmbientProfile& ambient,
                                             const ScenarioConfig& scenario, CoolingArchitecture baseline,
                                             CoolingArchitecture alternative) {
    ScenarioConfig base_scenario = scenario;
    base_scenario.architecture = baseline;
    ScenarioConfig alt_scenario = scenario;
    alt_scenario.architecture = alternative;

    const SimulationResult base = simulate(utilisation, ambient, base_scenario);
    const SimulationResult alt = simulate(utilisation, ambient, alt_scenario);

    ArchitectureComparison cmp;
    cmp.baseline = baseline;
    cmp.alternative = alternative;
    cmp.times.reserve(base.steps.size());
    cmp.baseline_cooling_w.reserve(base.steps.size());
    cmp.alternative_cooling_w.reserve(base.steps.size());
    for (std::size_t i = 0; i < base.steps.size(); ++i) {
        cmp.times.push_back(base.steps[i].time);
        cmp.baseline_cooling_w.push_back(base.steps[i].power.cooling_w());
        cmp.alternative_cooling_w.push_back(alt.steps[i].power.cooling_w());
    }
    cmp.baseline_cooling_wh = base.energy.cooling_wh();
    cmp.alternative_cooling_wh = alt.energy.cooling_wh();
    if (!(cmp.baseline_cooling_wh > 0.0)) {
        throw Error(ErrorKind::InvariantViolation, "baseline architecture uses no cooling energy");
    }
    cmp.relative_increase = cmp.alternative_cooling_wh / cmp.baseline_cooling_wh - 1.0;
    return cmp;
}

}  // namespace dcsim
