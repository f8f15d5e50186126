#pragma once

#include <span>
#include <vector>

namespace dcsim {

/// Chiller plant fitted as a quadratic in utilisation, scaled by a plant
/// size that is `sizing_factor` times the farm peak. Defaults are the fit for
/// a 7.22 C chilled-water supply.
struct ChillerSpec {
    double alpha = 0.32;
    double beta = 0.11;
    double gamma = 0.63;
    double sizing_factor = 0.7;
    double chilled_water_temp_c = 7.22;  // informational, not used by the fit
};

/// Air handler (fan) constants. The airflow constants also drive the heat
/// removal term of a CRAC unit.
struct CrahSpec {
    double idle_frac = 0.08;
    double eta_heat = 1.0;
    double unit_capacity_kw = 7.5;
    double unit_airflow_cmh = 14000.0;
};

struct CracSpec {
    double idle_frac = 0.25;
    double cop = 6.0;
};

void validate(const ChillerSpec& spec);
void validate(const CrahSpec& spec);
void validate(const CracSpec& spec);

struct EerBreakpoint {
    double ambient_c = 0.0;
    double eer = 0.0;
};

/// Chiller energy-efficiency ratio as a piecewise-linear function of outdoor
/// temperature. Breakpoints are kept sorted by ascending temperature; EER
/// must be positive and must not rise with temperature.
class EerTable {
public:
    explicit EerTable(std::vector<EerBreakpoint> breakpoints);

    /// 41/35/30/25/20/15/10/5/0 C chiller table.
    static EerTable standard();

    /// Linear interpolation, clamped to the end values outside the table.
    double lookup(double ambient_c) const;

    std::span<const EerBreakpoint> breakpoints() const { return breakpoints_; }

private:
    std::vector<EerBreakpoint> breakpoints_;
};

inline constexpr double kAirSpecificHeat = 1005.0;  // J/(kg C)

/// Heat carried off by the air stream: K * m_dot * cp * (t_hot - t_cold).
/// Diagnostic only; not part of the power roll-up.
double heat_load(double mass_flow_kg_s, double containment, double t_hot_c, double t_cold_c,
                 double cp_air = kAirSpecificHeat);

double chiller_power(double utilisation, double farm_peak_w, const ChillerSpec& spec);

double eer_lookup(double ambient_c, const EerTable& table);

/// EER(reference) / EER(ambient): 1 at the reference, > 1 when hotter.
double ambient_adjustment(double ambient_c, double reference_c, const EerTable& table);

/// Air-moving power for the whole farm. Airflow of each unit scales with
/// utilisation and the number of units is farm_peak / unit_capacity.
double heat_removal_power(double utilisation, double farm_peak_w, const CrahSpec& airflow);

double crah_power(double utilisation, double farm_peak_w, const CrahSpec& spec);

/// Idle power plus (1 + COP) times the heat removal power. The condenser
/// term is multiplied by `condenser_adjustment` (the ambient adjustment).
double crac_power(double utilisation, double farm_peak_w, const CracSpec& spec, const CrahSpec& airflow,
                  double condenser_adjustment = 1.0);

}  // namespace dcsim
