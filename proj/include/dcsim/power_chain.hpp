#pragma once

namespace dcsim {

/// Loss coefficients of the UPS -> PDU -> rack supply chain.
///
/// PDU loss is idle plus a quadratic term in the load carried by each PDU;
/// UPS loss is idle plus a term proportional to its throughput (IT load and
/// downstream PDU losses). `lambda_pdu` is in 1/W, `lambda_ups` is
/// dimensionless.
struct SupplyChainSpec {
    int pdu_count = 1;
    double pdu_idle_total_w = 0.0;
    double ups_idle_w = 0.0;
    double lambda_pdu = 0.0;
    double lambda_ups = 0.0;
};

void validate(const SupplyChainSpec& spec);

struct SupplyLoss {
    double pdu_loss_w = 0.0;
    double ups_loss_w = 0.0;
    double total_w = 0.0;
};

/// Calibration targets, all expressed relative to the farm peak power.
/// The proportional (non-idle) part of the peak loss is split between the
/// PDU quadratic term and the UPS linear term as
/// pdu_proportional_share : (1 - pdu_proportional_share).
struct SupplyTargets {
    int pdu_count = 100;
    double pdu_idle_total_frac = 0.015;
    double ups_idle_frac = 0.03;
    double peak_loss_frac = 0.15;
    double pdu_proportional_share = 3.0 / 7.0;
};

/// Load balanced evenly across PDUs.
double pdu_loss(double farm_power_w, const SupplyChainSpec& spec);
double ups_loss(double farm_power_w, double pdu_loss_w, const SupplyChainSpec& spec);
SupplyLoss supply_loss(double farm_power_w, const SupplyChainSpec& spec);

/// Chooses lambda_pdu and lambda_ups so the total loss at `farm_peak_w` is
/// exactly peak_loss_frac * farm_peak_w. Throws InfeasibleTarget when the idle
/// terms alone exceed the target.
SupplyChainSpec calibrate_supply(const SupplyTargets& targets, double farm_peak_w);

}  // namespace dcsim
