#include "dcsim/server_farm.hpp"

#include "dcsim/error.hpp"

#include <fmt/format.h>

namespace dcsim {

namespace {

void check_fraction(double value, const char* name) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw Error(ErrorKind::OutOfRange, fmt::format("{} = {} outside [0, 1]", name, value));
    }
}

// L(1-U) + U: fraction of the farm that stays powered on.
double running_fraction(double utilisation, double consolidation) {
    return consolidation * (1.0 - utilisation) + utilisation;
}

}  // namespace

void validate(const ServerSpec& spec) {
    if (spec.count < 1) {
        throw Error(ErrorKind::InvariantViolation, fmt::format("server count {} must be >= 1", spec.count));
    }
    if (!(spec.p_idle_w >= 0.0) || !(spec.p_idle_w <= spec.p_peak_w)) {
        throw Error(ErrorKind::InvariantViolation,
                    fmt::format("server powers must satisfy 0 <= idle ({}) <= peak ({})", spec.p_idle_w,
                                spec.p_peak_w));
    }
}

double aggregate_utilisation(std::span<const double> per_server) {
    if (per_server.empty()) {
        throw Error(ErrorKind::EmptyList, "no server utilisations given");
    }
    double sum = 0.0;
    for (double u : per_server) {
        check_fraction(u, "server utilisation");
        sum += u;
    }
    return sum / static_cast<double>(per_server.size());
}

double effective_server_utilisation(double utilisation, double consolidation) {
    check_fraction(utilisation, "utilisation");
    check_fraction(consolidation, "consolidation");
    if (utilisation == 0.0) {
        return 0.0;
    }
    return utilisation / running_fraction(utilisation, consolidation);
}

FarmState farm_state(double utilisation, double consolidation, const ServerSpec& spec) {
    FarmState state;
    state.aggregate_utilisation = utilisation;
    state.consolidation = consolidation;
    state.per_server_utilisation = effective_server_utilisation(utilisation, consolidation);
    state.running_count = static_cast<double>(spec.count) * running_fraction(utilisation, consolidation);
    return state;
}

double server_power(double server_utilisation, const ServerSpec& spec) {
    check_fraction(server_utilisation, "server utilisation");
    return spec.p_idle_w + (spec.p_peak_w - spec.p_idle_w) * server_utilisation;
}

double farm_power(double utilisation, double consolidation, const ServerSpec& spec) {
    const FarmState state = farm_state(utilisation, consolidation, spec);
    if (state.running_count == 0.0) {
        return 0.0;
    }
    return state.running_count * server_power(state.per_server_utilisation, spec);
}

}  // namespace dcsim
