#pragma once

#include <span>

namespace dcsim {

/// Homogeneous server cluster.
struct ServerSpec {
    int count = 1;
    double p_idle_w = 0.0;
    double p_peak_w = 0.0;

    /// Farm power with every server at full load.
    double farm_peak_w() const { return static_cast<double>(count) * p_peak_w; }
};

void validate(const ServerSpec& spec);

/// Operating point of the farm for a given aggregate utilisation and
/// consolidation level. `running_count` is continuous.
struct FarmState {
    double aggregate_utilisation = 0.0;
    double consolidation = 1.0;
    double per_server_utilisation = 0.0;
    double running_count = 0.0;
};

/// Mean of per-server utilisations.
double aggregate_utilisation(std::span<const double> per_server);

/// Utilisation of each running server when the aggregate load U is spread
/// with consolidation level L (0 = packed onto the fewest servers,
/// 1 = spread evenly over all servers). Defined as 0 at U = 0.
double effective_server_utilisation(double utilisation, double consolidation);

FarmState farm_state(double utilisation, double consolidation, const ServerSpec& spec);

/// Linear idle-to-peak power of one server.
double server_power(double server_utilisation, const ServerSpec& spec);

/// Running servers draw server_power(u_i); the rest are off.
double farm_power(double utilisation, double consolidation, const ServerSpec& spec);

}  // namespace dcsim
