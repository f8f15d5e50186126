#include "dcsim/analysis.hpp"
#include "dcsim/error.hpp"

#include "../support/oracle.hpp"
#include "../support/synthetic.hpp"

#include <doctest.h>

#include <numeric>

using namespace dcsim;

namespace {

const oracle::CaseStudy kOracle;

// Plain bisection on the oracle model; independent of the library solver.
double oracle_inverse(double target, double t) {
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (kOracle.chilled_water_total(mid, t) < target ? lo : hi) = mid;
    }
    return lo;
}

}  // namespace

TEST_CASE("curtailment endpoints and infeasibility") {
    const ScenarioConfig s = case_study_scenario();
    const PeakContext ctx = peak_context(s);

    const double top = step_power(1.0, 30.0, s, ctx).total_w;
    const auto at_top = curtail(top, 30.0, s, ctx);
    CHECK(at_top.feasible);
    CHECK(at_top.required_utilisation == 1.0);

    const double floor_w = step_power(0.0, 30.0, s, ctx).total_w;
    const auto below = curtail(0.5 * floor_w, 30.0, s, ctx);
    CHECK_FALSE(below.feasible);
    CHECK(below.required_utilisation == 0.0);
    CHECK(below.achieved_total_w == floor_w);

    const auto above = curtail(2 * top, 30.0, s, ctx);
    CHECK_FALSE(above.feasible);
    CHECK(above.required_utilisation == 1.0);
    CHECK(above.achieved_total_w == top);
}

TEST_CASE("curtailment to 15 MW at 30 C") {
    const ScenarioConfig s = case_study_scenario();
    const auto sol = curtail(15e6, 30.0, s, peak_context(s));
    CHECK(sol.feasible);
    CHECK(sol.required_utilisation == doctest::Approx(0.23660221551514798).epsilon(1e-9));
    CHECK(sol.required_utilisation == doctest::Approx(oracle_inverse(15e6, 30.0)).epsilon(1e-9));
    CHECK(std::abs(sol.achieved_total_w - 15e6) <= 1e-6 * 15e6);
    CHECK(sol.iterations <= kMaxBisectionIterations);
}

TEST_CASE("property: curtailment inverts the forward model") {
    for (auto arch : {CoolingArchitecture::ChilledWaterCrah, CoolingArchitecture::CracDx, CoolingArchitecture::FreeAir}) {
        ScenarioConfig s = case_study_scenario();
        s.architecture = arch;
        const PeakContext ctx = peak_context(s);
        for (double t : {0.0, 15.0, 30.0, 41.0}) {
            for (int i = 1; i <= 9; ++i) {
                const double u0 = i / 10.0;
                const auto sol = curtail(step_power(u0, t, s, ctx).total_w, t, s, ctx);
                CHECK(sol.feasible);
                CHECK(std::abs(sol.required_utilisation - u0) <= 1e-5);
                CHECK(std::abs(sol.achieved_total_w - sol.target_total_w) <= 1e-6 * sol.target_total_w);
            }
        }
    }
}

TEST_CASE("peak breakdown shares") {
    const ComponentValues shares = peak_breakdown(case_study_scenario());
    const auto share = [&](Component c) { return shares[static_cast<std::size_t>(c)]; };
    CHECK(share(Component::ServerFarm) == doctest::Approx(10e6 / 2.398e7).epsilon(1e-12));
    CHECK(share(Component::ServerFarm) == doctest::Approx(0.417).epsilon(1e-3));
    CHECK(share(Component::Chiller) == doctest::Approx(0.309).epsilon(1e-3));
    CHECK(share(Component::Crah) == doctest::Approx(0.111).epsilon(1e-2));
    CHECK(share(Component::Pumps) == doctest::Approx(0.04).epsilon(1e-9));
    CHECK(share(Component::Misc) == doctest::Approx(0.06).epsilon(1e-9));
    CHECK(share(Component::PduLoss) + share(Component::UpsLoss) == doctest::Approx(1.5e6 / 2.398e7).epsilon(1e-12));
    CHECK(std::accumulate(shares.begin(), shares.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("two-component scenario") {
    ScenarioConfig s = case_study_scenario();
    s.architecture = CoolingArchitecture::FreeAir;
    s.pump_fraction = 0.0;
    s.misc_fraction = 0.0;
    s.supply.pdu_idle_total_frac = 0.0;
    s.supply.ups_idle_frac = 0.0;
    s.supply.peak_loss_frac = 1e-300;  // calibration needs a positive target
    const ComponentValues shares = peak_breakdown(s);
    const double two = shares[static_cast<std::size_t>(Component::ServerFarm)] +
                       shares[static_cast<std::size_t>(Component::Crah)];
    CHECK(two == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("peak shares are invariant to farm size") {
    ScenarioConfig small = case_study_scenario();
    small.server.count = 400;
    small.supply.pdu_count = 1;
    const ComponentValues a = peak_breakdown(small);
    const ComponentValues b = peak_breakdown(case_study_scenario());
    for (std::size_t c = 0; c < kComponentCount; ++c) {
        CHECK(oracle::rel_close(a[c], b[c], 1e-9));
    }
}

TEST_CASE("power curves") {
    const ScenarioConfig s = case_study_scenario();
    const PeakContext ctx = peak_context(s);
    std::vector<double> t30{30.0};
    const auto two = power_curve(t30, s, 2);
    REQUIRE(two.size() == 1);
    REQUIRE(two[0].points.size() == 2);
    CHECK(two[0].points[0].utilisation == 0.0);
    CHECK(two[0].points[1].utilisation == 1.0);
    CHECK(two[0].points[0].total_w == step_power(0.0, 30.0, s, ctx).total_w);
    CHECK(two[0].points[1].total_w == step_power(1.0, 30.0, s, ctx).total_w);

    const double decrease = 1.0 - two[0].points[0].total_w / two[0].points[1].total_w;
    CHECK(decrease == doctest::Approx(1.0 - 12800559.748427672 / 2.398e7).epsilon(1e-9));

    std::vector<double> temps{0.0, 15.0, 30.0, 41.0};
    const auto curves = power_curve(temps, s, 51);
    for (const auto& c : curves) {
        for (std::size_t i = 1; i < c.points.size(); ++i) CHECK(c.points[i].total_w > c.points[i - 1].total_w);
    }
    for (std::size_t k = 1; k < curves.size(); ++k) {
        for (std::size_t i = 1; i < curves[k].points.size(); ++i) {
            CHECK(curves[k].points[i].total_w >= curves[k - 1].points[i].total_w);
        }
    }
    CHECK_THROWS_AS(power_curve(temps, s, 1), Error);
}

TEST_CASE("architecture comparison") {
    const ScenarioConfig s = case_study_scenario();
    const auto start = synthetic::at("2016-06-01T00:00");
    std::vector<double> full(24, 1.0), ref(24, 30.0);
    const auto u = make_utilisation_profile(start, full);
    const auto t = make_ambient_profile(start, ref);

    const auto self = compare_architectures(u, t, s, CoolingArchitecture::CracDx, CoolingArchitecture::CracDx);
    CHECK(self.relative_increase == 0.0);

    const auto cmp = compare_architectures(u, t, s);
    REQUIRE(cmp.times.size() == 24);
    CHECK(cmp.alternative_cooling_w[0] == doctest::Approx(1.5534e7).epsilon(1e-12));
    CHECK(cmp.baseline_cooling_w[0] == doctest::Approx(7.42e6 + 2.662e6 + 0.04 * 2.398e7).epsilon(1e-12));
    CHECK(cmp.relative_increase == doctest::Approx(1.5534e7 / (7.42e6 + 2.662e6 + 0.04 * 2.398e7) - 1).epsilon(1e-9));
    CHECK(cmp.relative_increase == doctest::Approx(0.407).epsilon(1e-2));

    const auto swapped = compare_architectures(u, t, s, CoolingArchitecture::CracDx, CoolingArchitecture::ChilledWaterCrah);
    CHECK(swapped.alternative_cooling_wh - swapped.baseline_cooling_wh ==
          doctest::Approx(-(cmp.alternative_cooling_wh - cmp.baseline_cooling_wh)));

    std::vector<double> shorter(23, 1.0);
    CHECK_THROWS_AS(compare_architectures(make_utilisation_profile(start, shorter), t, s), Error);
}

TEST_CASE("CRAC costs more than chilled water above the low-load crossover") {
    // At low utilisation the chiller's constant term dominates and the
    // chilled-water stack is the more expensive one; the crossover sits near
    // U = 0.33 at the reference temperature.
    ScenarioConfig cw = case_study_scenario();
    ScenarioConfig crac = cw;
    crac.architecture = CoolingArchitecture::CracDx;
    const PeakContext cw_ctx = peak_context(cw);
    const PeakContext crac_ctx = peak_context(crac);
    for (int i = 0; i <= 100; ++i) {
        const double u = i / 100.0;
        const double cw_w = step_power(u, 30.0, cw, cw_ctx).cooling_w();
        const double crac_w = step_power(u, 30.0, crac, crac_ctx).cooling_w();
        CHECK(oracle::rel_close(cw_w, kOracle.chilled_water_cooling(u, 30.0), 1e-12));
        CHECK(oracle::rel_close(crac_w, kOracle.crac(u, 30.0), 1e-12));
        if (u >= 0.35) CHECK(crac_w > cw_w);
        if (u <= 0.30) CHECK(crac_w < cw_w);
    }
}
