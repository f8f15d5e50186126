#include "dcsim/power_chain.hpp"

#include "dcsim/error.hpp"

#include <fmt/format.h>

namespace dcsim {

namespace {

void check_nonnegative(double value, const char* name) {
    if (!(value >= 0.0)) {
        throw Error(ErrorKind::NegativeInput, fmt::format("{} = {} must be >= 0", name, value));
    }
}

}  // namespace

void validate(const SupplyChainSpec& spec) {
    if (spec.pdu_count < 1) {
        throw Error(ErrorKind::InvariantViolation, fmt::format("pdu_count {} must be >= 1", spec.pdu_count));
    }
    if (!(spec.pdu_idle_total_w >= 0.0 && spec.ups_idle_w >= 0.0 && spec.lambda_pdu >= 0.0 &&
          spec.lambda_ups >= 0.0)) {
        throw Error(ErrorKind::InvariantViolation, "supply-chain idle powers and coefficients must be >= 0");
    }
}

double pdu_loss(double farm_power_w, const SupplyChainSpec& spec) {
    check_nonnegative(farm_power_w, "farm power");
    const double count = static_cast<double>(spec.pdu_count);
    const double per_pdu = farm_power_w / count;
    return spec.pdu_idle_total_w + count * spec.lambda_pdu * per_pdu * per_pdu;
}

double ups_loss(double farm_power_w, double pdu_loss_w, const SupplyChainSpec& spec) {
    check_nonnegative(farm_power_w, "farm power");
    check_nonnegative(pdu_loss_w, "PDU loss");
    return spec.ups_idle_w + spec.lambda_ups * (farm_power_w + pdu_loss_w);
}

SupplyLoss supply_loss(double farm_power_w, const SupplyChainSpec& spec) {
    SupplyLoss loss;
    loss.pdu_loss_w = pdu_loss(farm_power_w, spec);
    loss.ups_loss_w = ups_loss(farm_power_w, loss.pdu_loss_w, spec);
    loss.total_w = loss.pdu_loss_w + loss.ups_loss_w;
    return loss;
}

SupplyChainSpec calibrate_supply(const SupplyTargets& targets, double farm_peak_w) {
    if (!(targets.peak_loss_frac > 0.0 && targets.peak_loss_frac < 1.0)) {
        throw Error(ErrorKind::OutOfRange,
                    fmt::format("peak_loss_frac = {} outside (0, 1)", targets.peak_loss_frac));
    }
    if (!(farm_peak_w > 0.0)) {
        throw Error(ErrorKind::OutOfRange, fmt::format("farm peak {} W must be > 0", farm_peak_w));
    }
    if (targets.pdu_count < 1) {
        throw Error(ErrorKind::InvariantViolation, fmt::format("pdu_count {} must be >= 1", targets.pdu_count));
    }
    if (!(targets.pdu_idle_total_frac >= 0.0 && targets.ups_idle_frac >= 0.0)) {
        throw Error(ErrorKind::InvariantViolation, "supply idle fractions must be >= 0");
    }
    if (!(targets.pdu_proportional_share >= 0.0 && targets.pdu_proportional_share <= 1.0)) {
        throw Error(ErrorKind::OutOfRange, "pdu_proportional_share outside [0, 1]");
    }

    SupplyChainSpec spec;
    spec.pdu_count = targets.pdu_count;
    spec.pdu_idle_total_w = targets.pdu_idle_total_frac * farm_peak_w;
    spec.ups_idle_w = targets.ups_idle_frac * farm_peak_w;

    const double target_w = targets.peak_loss_frac * farm_peak_w;
    const double proportional_w = target_w - spec.pdu_idle_total_w - spec.ups_idle_w;
    if (proportional_w < 0.0) {
        throw Error(ErrorKind::InfeasibleTarget,
                    fmt::format("idle losses ({} W) exceed the peak loss target ({} W)",
                                spec.pdu_idle_total_w + spec.ups_idle_w, target_w));
    }

    // Quadratic PDU term: count * lambda * (P / count)^2 = share * proportional.
    const double pdu_quadratic_w = targets.pdu_proportional_share * proportional_w;
    const double count = static_cast<double>(spec.pdu_count);
    const double per_pdu = farm_peak_w / count;
    spec.lambda_pdu = pdu_quadratic_w / (count * per_pdu * per_pdu);

    // UPS linear term takes whatever is left of the target at peak.
    const double pdu_at_peak_w = pdu_loss(farm_peak_w, spec);
    spec.lambda_ups = (target_w - pdu_at_peak_w - spec.ups_idle_w) / (farm_peak_w + pdu_at_peak_w);
    if (spec.lambda_ups < 0.0) {
        spec.lambda_ups = 0.0;
    }
    return spec;
}

}  // namespace dcsim
