#include "dcsim/config.hpp"

#include "dcsim/error.hpp"
#include "dcsim/profiles.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <set>

#include <fmt/format.h>

namespace dcsim {

std::string_view to_string(CoolingArchitecture arch) {
    switch (arch) {
    case CoolingArchitecture::ChilledWaterCrah: return "crah_chiller";
    case CoolingArchitecture::CracDx: return "crac";
    case CoolingArchitecture::FreeAir: return "free_air";
    }
    return "unknown";
}

std::optional<CoolingArchitecture> parse_architecture(std::string_view name) {
    if (name == "crah_chiller") return CoolingArchitecture::ChilledWaterCrah;
    if (name == "crac") return CoolingArchitecture::CracDx;
    if (name == "free_air") return CoolingArchitecture::FreeAir;
    return std::nullopt;
}

void validate(const ScenarioConfig& scenario) {
    validate(scenario.server);
    if (!(scenario.consolidation >= 0.0 && scenario.consolidation <= 1.0)) {
        throw Error(ErrorKind::InvariantViolation,
                    fmt::format("consolidation = {} outside [0, 1]", scenario.consolidation));
    }
    if (!(scenario.pump_fraction >= 0.0 && scenario.misc_fraction >= 0.0)) {
        throw Error(ErrorKind::InvariantViolation, "pump_fraction and misc_fraction must be >= 0");
    }
    if (!(scenario.pump_fraction + scenario.misc_fraction < 1.0)) {
        throw Error(ErrorKind::InvariantViolation,
                    fmt::format("pump_fraction + misc_fraction = {} must be < 1",
                                scenario.pump_fraction + scenario.misc_fraction));
    }
    validate(scenario.chiller);
    validate(scenario.crah);
    validate(scenario.crac);
}

ScenarioConfig case_study_scenario() {
    ScenarioConfig scenario;
    scenario.server = ServerSpec{40000, 120.0, 250.0};
    return scenario;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

double to_double(std::string_view key, std::string_view value) {
    std::string_view v = trim(value);
    if (!v.empty() && v.front() == '+') v.remove_prefix(1);
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size() || !std::isfinite(out)) {
        throw Error(ErrorKind::MalformedRow, fmt::format("key '{}': '{}' is not a number", key, value));
    }
    return out;
}

int to_int(std::string_view key, std::string_view value) {
    std::string_view v = trim(value);
    int out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size()) {
        throw Error(ErrorKind::MalformedRow, fmt::format("key '{}': '{}' is not an integer", key, value));
    }
    return out;
}

EerTable to_eer_table(std::string_view key, std::string_view value) {
    std::vector<EerBreakpoint> points;
    std::size_t pos = 0;
    while (pos <= value.size()) {
        std::size_t end = value.find(';', pos);
        if (end == std::string_view::npos) end = value.size();
        std::string_view pair = trim(value.substr(pos, end - pos));
        pos = end + 1;
        if (pair.empty()) continue;
        auto colon = pair.find(':');
        if (colon == std::string_view::npos) {
            throw Error(ErrorKind::MalformedRow, fmt::format("key '{}': '{}' is not a T:EER pair", key, pair));
        }
        points.push_back({to_double(key, pair.substr(0, colon)), to_double(key, pair.substr(colon + 1))});
    }
    try {
        return EerTable(std::move(points));
    } catch (const Error& e) {
        throw Error(ErrorKind::InvariantViolation, fmt::format("key '{}': {}", key, e.what()));
    }
}

using Setter = std::function<void(ScenarioConfig&, std::string_view key, std::string_view value)>;

const std::map<std::string_view, Setter>& setters() {
    static const std::map<std::string_view, Setter> table = [] {
        std::map<std::string_view, Setter> m;
        auto num = [&m](std::string_view key, auto member) {
            m.emplace(key, [member](ScenarioConfig& c, std::string_view k, std::string_view v) {
                std::invoke(member, c) = to_double(k, v);
            });
        };
        m.emplace("server.count", [](ScenarioConfig& c, std::string_view k, std::string_view v) {
            c.server.count = to_int(k, v);
        });
        num("server.p_idle_w", [](ScenarioConfig& c) -> double& { return c.server.p_idle_w; });
        num("server.p_peak_w", [](ScenarioConfig& c) -> double& { return c.server.p_peak_w; });
        num("consolidation", [](ScenarioConfig& c) -> double& { return c.consolidation; });
        m.emplace("supply.pdu_count", [](ScenarioConfig& c, std::string_view k, std::string_view v) {
            c.supply.pdu_count = to_int(k, v);
        });
        num("supply.pdu_idle_total_frac", [](ScenarioConfig& c) -> double& { return c.supply.pdu_idle_total_frac; });
        num("supply.ups_idle_frac", [](ScenarioConfig& c) -> double& { return c.supply.ups_idle_frac; });
        num("supply.peak_loss_frac", [](ScenarioConfig& c) -> double& { return c.supply.peak_loss_frac; });
        m.emplace("architecture", [](ScenarioConfig& c, std::string_view k, std::string_view v) {
            auto arch = parse_architecture(trim(v));
            if (!arch) {
                throw Error(ErrorKind::InvariantViolation,
                            fmt::format("key '{}': unknown architecture '{}' (expected crah_chiller, crac or "
                                        "free_air)",
                                        k, v));
            }
            c.architecture = *arch;
        });
        num("chiller.alpha", [](ScenarioConfig& c) -> double& { return c.chiller.alpha; });
        num("chiller.beta", [](ScenarioConfig& c) -> double& { return c.chiller.beta; });
        num("chiller.gamma", [](ScenarioConfig& c) -> double& { return c.chiller.gamma; });
        num("chiller.sizing_factor", [](ScenarioConfig& c) -> double& { return c.chiller.sizing_factor; });
        num("crah.idle_frac", [](ScenarioConfig& c) -> double& { return c.crah.idle_frac; });
        num("crah.eta_heat", [](ScenarioConfig& c) -> double& { return c.crah.eta_heat; });
        num("crah.unit_capacity_kw", [](ScenarioConfig& c) -> double& { return c.crah.unit_capacity_kw; });
        num("crah.unit_airflow_cmh", [](ScenarioConfig& c) -> double& { return c.crah.unit_airflow_cmh; });
        num("crac.idle_frac", [](ScenarioConfig& c) -> double& { return c.crac.idle_frac; });
        num("crac.cop", [](ScenarioConfig& c) -> double& { return c.crac.cop; });
        num("pump_fraction", [](ScenarioConfig& c) -> double& { return c.pump_fraction; });
        num("misc_fraction", [](ScenarioConfig& c) -> double& { return c.misc_fraction; });
        num("reference_ambient_c", [](ScenarioConfig& c) -> double& { return c.reference_ambient_c; });
        m.emplace("eer.table", [](ScenarioConfig& c, std::string_view k, std::string_view v) {
            c.eer = to_eer_table(k, v);
        });
        return m;
    }();
    return table;
}

}  // namespace

ScenarioConfig parse_scenario_config(std::string_view text) {
    // Collect first, then apply in key order so the result never depends on
    // line order.
    std::map<std::string, std::pair<std::string, std::size_t>> entries;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = trim(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw Error(ErrorKind::MalformedRow, fmt::format("line {}: expected key=value, got '{}'", line_no, line));
        }
        std::string key{trim(line.substr(0, eq))};
        std::string value{trim(line.substr(eq + 1))};
        if (!setters().contains(key)) {
            throw Error(ErrorKind::UnknownKey, fmt::format("line {}: unknown key '{}'", line_no, key));
        }
        auto [it, inserted] = entries.emplace(key, std::make_pair(value, line_no));
        if (!inserted) {
            throw Error(ErrorKind::MalformedRow,
                        fmt::format("line {}: key '{}' already set on line {}", line_no, key, it->second.second));
        }
    }

    for (std::string_view required : {"server.count", "server.p_idle_w", "server.p_peak_w", "architecture"}) {
        if (!entries.contains(std::string{required})) {
            throw Error(ErrorKind::MissingRequired, fmt::format("missing required key '{}'", required));
        }
    }

    ScenarioConfig scenario;
    for (const auto& [key, value] : entries) {
        setters().at(key)(scenario, key, value.first);
    }
    validate(scenario);
    return scenario;
}

std::string write_scenario_config(const ScenarioConfig& s) {
    std::string out;
    auto put = [&out](std::string_view key, const std::string& value) { out += fmt::format("{}={}\n", key, value); };
    put("server.count", std::to_string(s.server.count));
    put("server.p_idle_w", format_number(s.server.p_idle_w));
    put("server.p_peak_w", format_number(s.server.p_peak_w));
    put("consolidation", format_number(s.consolidation));
    put("supply.pdu_count", std::to_string(s.supply.pdu_count));
    put("supply.pdu_idle_total_frac", format_number(s.supply.pdu_idle_total_frac));
    put("supply.ups_idle_frac", format_number(s.supply.ups_idle_frac));
    put("supply.peak_loss_frac", format_number(s.supply.peak_loss_frac));
    put("architecture", std::string{to_string(s.architecture)});
    put("chiller.alpha", format_number(s.chiller.alpha));
    put("chiller.beta", format_number(s.chiller.beta));
    put("chiller.gamma", format_number(s.chiller.gamma));
    put("chiller.sizing_factor", format_number(s.chiller.sizing_factor));
    put("crah.idle_frac", format_number(s.crah.idle_frac));
    put("crah.eta_heat", format_number(s.crah.eta_heat));
    put("crah.unit_capacity_kw", format_number(s.crah.unit_capacity_kw));
    put("crah.unit_airflow_cmh", format_number(s.crah.unit_airflow_cmh));
    put("crac.idle_frac", format_number(s.crac.idle_frac));
    put("crac.cop", format_number(s.crac.cop));
    put("pump_fraction", format_number(s.pump_fraction));
    put("misc_fraction", format_number(s.misc_fraction));
    put("reference_ambient_c", format_number(s.reference_ambient_c));
    std::string table;
    auto bps = s.eer.breakpoints();
    for (auto it = bps.rbegin(); it != bps.rend(); ++it) {
        if (!table.empty()) table += ';';
        table += fmt::format("{}:{}", format_number(it->ambient_c), format_number(it->eer));
    }
    put("eer.table", table);
    return out;
}

}  // namespace dcsim
