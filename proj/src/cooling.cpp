#include "dcsim/cooling.hpp"

#include "dcsim/error.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace dcsim {

namespace {

// kW of air-moving power per (kW of load capacity x CMH of airflow).
constexpr double kHeatRemovalCoefficient = 1.33e-5;

void check_utilisation(double u) {
    if (!(u >= 0.0 && u <= 1.0)) {
        throw Error(ErrorKind::OutOfRange, fmt::format("utilisation {} outside [0, 1]", u));
    }
}

void check_farm_peak(double farm_peak_w) {
    if (!(farm_peak_w >= 0.0)) {
        throw Error(ErrorKind::OutOfRange, fmt::format("farm peak {} W must be >= 0", farm_peak_w));
    }
}

}  // namespace

void validate(const ChillerSpec& spec) {
    if (!(spec.alpha >= 0.0 && spec.beta >= 0.0 && spec.gamma > 0.0)) {
        throw Error(ErrorKind::InvariantViolation,
                    fmt::format("chiller coefficients need alpha >= 0, beta >= 0, gamma > 0 (got {}, {}, {})",
                                spec.alpha, spec.beta, spec.gamma));
    }
    if (!(spec.sizing_factor > 0.0)) {
        throw Error(ErrorKind::InvariantViolation, "chiller sizing_factor must be > 0");
    }
}

void validate(const CrahSpec& spec) {
    if (!(spec.eta_heat > 0.0 && spec.eta_heat <= 1.0)) {
        throw Error(ErrorKind::InvariantViolation, fmt::format("crah.eta_heat = {} outside (0, 1]", spec.eta_heat));
    }
    if (!(spec.idle_frac >= 0.0)) {
        throw Error(ErrorKind::InvariantViolation, "crah.idle_frac must be >= 0");
    }
    if (!(spec.unit_capacity_kw > 0.0 && spec.unit_airflow_cmh >= 0.0)) {
        throw Error(ErrorKind::InvariantViolation, "CRAH unit capacity must be > 0 and airflow >= 0");
    }
}

void validate(const CracSpec& spec) {
    if (!(spec.cop >= 0.0)) {
        throw Error(ErrorKind::InvariantViolation, fmt::format("crac.cop = {} must be >= 0", spec.cop));
    }
    if (!(spec.idle_frac >= 0.0)) {
        throw Error(ErrorKind::InvariantViolation, "crac.idle_frac must be >= 0");
    }
}

EerTable::EerTable(std::vector<EerBreakpoint> breakpoints) : breakpoints_(std::move(breakpoints)) {
    if (breakpoints_.empty()) {
        throw Error(ErrorKind::InvariantViolation, "EER table is empty");
    }
    std::sort(breakpoints_.begin(), breakpoints_.end(),
              [](const EerBreakpoint& a, const EerBreakpoint& b) { return a.ambient_c < b.ambient_c; });
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
        if (!(breakpoints_[i].eer > 0.0)) {
            throw Error(ErrorKind::InvariantViolation,
                        fmt::format("EER at {} C must be > 0", breakpoints_[i].ambient_c));
        }
        if (i > 0) {
            if (breakpoints_[i].ambient_c == breakpoints_[i - 1].ambient_c) {
                throw Error(ErrorKind::InvariantViolation,
                            fmt::format("duplicate EER breakpoint at {} C", breakpoints_[i].ambient_c));
            }
            if (breakpoints_[i].eer > breakpoints_[i - 1].eer) {
                throw Error(ErrorKind::InvariantViolation,
                            fmt::format("EER rises from {} C to {} C", breakpoints_[i - 1].ambient_c,
                                        breakpoints_[i].ambient_c));
            }
        }
    }
}

EerTable EerTable::standard() {
    return EerTable({{41.0, 2.66},
                     {35.0, 3.12},
                     {30.0, 3.52},
                     {25.0, 3.93},
                     {20.0, 4.34},
                     {15.0, 4.74},
                     {10.0, 5.13},
                     {5.0, 5.49},
                     {0.0, 5.82}});
}

double EerTable::lookup(double ambient_c) const {
    const auto& bp = breakpoints_;
    if (ambient_c <= bp.front().ambient_c) {
        return bp.front().eer;
    }
    if (ambient_c >= bp.back().ambient_c) {
        return bp.back().eer;
    }
    auto upper = std::upper_bound(bp.begin(), bp.end(), ambient_c,
                                  [](double t, const EerBreakpoint& b) { return t < b.ambient_c; });
    auto lower = upper - 1;
    if (ambient_c == lower->ambient_c) {
        return lower->eer;
    }
    const double w = (ambient_c - lower->ambient_c) / (upper->ambient_c - lower->ambient_c);
    return lower->eer + w * (upper->eer - lower->eer);
}

double heat_load(double mass_flow_kg_s, double containment, double t_hot_c, double t_cold_c, double cp_air) {
    if (!(mass_flow_kg_s >= 0.0)) {
        throw Error(ErrorKind::OutOfRange, "air mass flow must be >= 0");
    }
    if (!(containment > 0.0 && containment <= 1.0)) {
        throw Error(ErrorKind::OutOfRange, fmt::format("containment index {} outside (0, 1]", containment));
    }
    if (t_hot_c < t_cold_c) {
        throw Error(ErrorKind::InvertedTemperatures,
                    fmt::format("hot air {} C is colder than cold air {} C", t_hot_c, t_cold_c));
    }
    return containment * mass_flow_kg_s * cp_air * (t_hot_c - t_cold_c);
}

double chiller_power(double utilisation, double farm_peak_w, const ChillerSpec& spec) {
    check_utilisation(utilisation);
    check_farm_peak(farm_peak_w);
    const double u = utilisation;
    return spec.sizing_factor * farm_peak_w * (spec.alpha * u * u + spec.beta * u + spec.gamma);
}

double eer_lookup(double ambient_c, const EerTable& table) { return table.lookup(ambient_c); }

double ambient_adjustment(double ambient_c, double reference_c, const EerTable& table) {
    return table.lookup(reference_c) / table.lookup(ambient_c);
}

double heat_removal_power(double utilisation, double farm_peak_w, const CrahSpec& airflow) {
    check_utilisation(utilisation);
    check_farm_peak(farm_peak_w);
    const double units = (farm_peak_w / 1000.0) / airflow.unit_capacity_kw;
    const double unit_flow_cmh = airflow.unit_airflow_cmh * utilisation;
    const double per_unit_kw = kHeatRemovalCoefficient * (airflow.unit_capacity_kw / airflow.eta_heat) * unit_flow_cmh;
    return units * per_unit_kw * 1000.0;
}

double crah_power(double utilisation, double farm_peak_w, const CrahSpec& spec) {
    return spec.idle_frac * farm_peak_w + heat_removal_power(utilisation, farm_peak_w, spec);
}

double crac_power(double utilisation, double farm_peak_w, const CracSpec& spec, const CrahSpec& airflow,
                  double condenser_adjustment) {
    const double heat_w = heat_removal_power(utilisation, farm_peak_w, airflow);
    return spec.idle_frac * farm_peak_w + (1.0 + spec.cop) * heat_w * condenser_adjustment;
}

}  // namespace dcsim
