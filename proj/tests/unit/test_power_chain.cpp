#include "dcsim/error.hpp"
#include "dcsim/power_chain.hpp"

#include "../support/oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace dcsim;

namespace {

SupplyChainSpec default_chain() {
    SupplyChainSpec s;
    s.pdu_count = 100;
    s.pdu_idle_total_w = 150e3;
    s.ups_idle_w = 300e3;
    s.lambda_pdu = 4.5e-7;
    s.lambda_ups = 0.6e6 / 10.6e6;
    return s;
}

}  // namespace

TEST_CASE("PDU loss: idle plus quadratic per-PDU term") {
    const auto s = default_chain();
    CHECK(pdu_loss(0.0, s) == 150e3);
    CHECK(pdu_loss(10e6, s) == doctest::Approx(600e3).epsilon(1e-12));
    CHECK(pdu_loss(5e6, s) - 150e3 == doctest::Approx(112.5e3).epsilon(1e-12));
    CHECK(pdu_loss(10e6, s) - 150e3 == doctest::Approx(450e3).epsilon(1e-12));
    CHECK_THROWS_AS(pdu_loss(-1.0, s), Error);
}

TEST_CASE("UPS loss acts on IT load plus PDU loss") {
    auto s = default_chain();
    CHECK(ups_loss(0.0, 150e3, s) == doctest::Approx(300e3 + 150e3 * 0.6 / 10.6).epsilon(1e-12));
    CHECK(ups_loss(0.0, 150e3, s) == doctest::Approx(308.49e3).epsilon(1e-4));
    CHECK(ups_loss(10e6, 600e3, s) == doctest::Approx(900e3).epsilon(1e-12));
    s.lambda_ups = 0.0;
    CHECK(ups_loss(10e6, 600e3, s) == 300e3);
    try {
        ups_loss(1.0, -5.0, s);
        FAIL("expected NegativeInput");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NegativeInput);
    }
}

TEST_CASE("calibration hits the peak-loss target") {
    const SupplyChainSpec s = calibrate_supply(SupplyTargets{}, 10e6);
    CHECK(s.pdu_count == 100);
    CHECK(s.pdu_idle_total_w == doctest::Approx(150e3));
    CHECK(s.ups_idle_w == doctest::Approx(300e3));
    CHECK(s.lambda_pdu == doctest::Approx(4.5e-7).epsilon(1e-12));
    CHECK(s.lambda_ups == doctest::Approx(0.0566).epsilon(1e-3));
    CHECK(s.lambda_ups == doctest::Approx(6.0 / 106.0).epsilon(1e-12));
    const SupplyLoss loss = supply_loss(10e6, s);
    CHECK(loss.total_w == doctest::Approx(1.5e6).epsilon(1e-12));
    CHECK(loss.total_w == loss.pdu_loss_w + loss.ups_loss_w);
}

TEST_CASE("calibration rejects infeasible and out-of-range targets") {
    SupplyTargets t;
    t.pdu_idle_total_frac = 0.1;
    t.ups_idle_frac = 0.1;
    try {
        calibrate_supply(t, 10e6);
        FAIL("expected InfeasibleTarget");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InfeasibleTarget);
    }
    SupplyTargets bad;
    bad.peak_loss_frac = 1.0;
    CHECK_THROWS_AS(calibrate_supply(bad, 10e6), Error);
    CHECK_THROWS_AS(calibrate_supply(SupplyTargets{}, 0.0), Error);
}

TEST_CASE("property: calibration round trip over random targets") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> frac(0.0, 0.05);
    std::uniform_real_distribution<double> loss(0.11, 0.4);
    std::uniform_real_distribution<double> peak(1e4, 1e8);
    std::uniform_int_distribution<int> pdus(1, 500);
    for (int i = 0; i < 500; ++i) {
        SupplyTargets t;
        t.pdu_count = pdus(rng);
        t.pdu_idle_total_frac = frac(rng);
        t.ups_idle_frac = frac(rng);
        t.peak_loss_frac = loss(rng);
        const double p = peak(rng);
        const SupplyChainSpec s = calibrate_supply(t, p);
        CHECK(oracle::rel_close(supply_loss(p, s).total_w, t.peak_loss_frac * p, 1e-9));
    }
}

TEST_CASE("property: quadratic law, monotonicity and convexity of total loss") {
    const auto s = calibrate_supply(SupplyTargets{}, 10e6);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> load(0.0, 5e6);
    for (int i = 0; i < 500; ++i) {
        const double x = load(rng);
        const double q1 = pdu_loss(x, s) - s.pdu_idle_total_w;
        const double q2 = pdu_loss(2 * x, s) - s.pdu_idle_total_w;
        CHECK(std::abs(q2 - 4 * q1) <= 1e-15 * 8 * s.pdu_idle_total_w);
        // Without the idle offset the law holds bit for bit.
        SupplyChainSpec no_idle = s;
        no_idle.pdu_idle_total_w = 0.0;
        CHECK(pdu_loss(2 * x, no_idle) == 4 * pdu_loss(x, no_idle));
    }
    const int n = 400;
    std::vector<double> total(n + 1);
    for (int i = 0; i <= n; ++i) total[static_cast<std::size_t>(i)] = supply_loss(10e6 * i / n, s).total_w;
    for (int i = 1; i <= n; ++i) CHECK(total[static_cast<std::size_t>(i)] > total[static_cast<std::size_t>(i - 1)]);
    for (int i = 1; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        CHECK(total[k + 1] - 2 * total[k] + total[k - 1] >= -1e-6);
    }
}
