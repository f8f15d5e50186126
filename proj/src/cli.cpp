#include "dcsim/cli.hpp"

#include "dcsim/analysis.hpp"
#include "dcsim/config.hpp"
#include "dcsim/engine.hpp"
#include "dcsim/error.hpp"
#include "dcsim/profiles.hpp"
#include "dcsim/results_io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include <fmt/format.h>

namespace dcsim::cli {

namespace {

// Data/config problems that are not dcsim::Error (I/O failures).
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError(fmt::format("{}: cannot open for reading", path));
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <typename Parse>
auto parse_file(const std::string& path, Parse parse) {
    const std::string text = read_file(path);
    try {
        return parse(text);
    } catch (const Error& e) {
        throw Error(e.kind(), fmt::format("{}: {}", path, e.what()));
    }
}

/// Output files collected during a command and committed together at the end.
class PendingWrites {
public:
    void add(std::string path, std::string content) { files_.emplace_back(std::move(path), std::move(content)); }

    void commit() const {
        std::vector<std::pair<std::filesystem::path, std::filesystem::path>> staged;
        try {
            for (const auto& [path, content] : files_) {
                std::filesystem::path target{path};
                std::filesystem::path tmp = target;
                tmp += ".tmp";
                std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
                if (!out) {
                    throw IoError(fmt::format("{}: cannot open for writing", tmp.string()));
                }
                out << content;
                out.close();
                if (!out) {
                    throw IoError(fmt::format("{}: write failed", tmp.string()));
                }
                staged.emplace_back(tmp, target);
            }
            for (const auto& [tmp, target] : staged) {
                std::filesystem::rename(tmp, target);
            }
        } catch (...) {
            std::error_code ec;
            for (const auto& [tmp, target] : staged) {
                std::filesystem::remove(tmp, ec);
            }
            throw;
        }
    }

private:
    std::vector<std::pair<std::string, std::string>> files_;
};

struct Options {
    std::string config;
    std::string utilisation;
    std::string weather;
    std::string out;
    std::string svg;
    std::string arch;
    double ambient_c = 0.0;
    double target_w = 0.0;
    std::vector<double> temps;
    int points = 11;
};

ScenarioConfig load_scenario(const Options& opt) {
    ScenarioConfig scenario = parse_file(opt.config, parse_scenario_config);
    if (!opt.arch.empty()) {
        // Validated by the CLI11 check, so this always succeeds.
        scenario.architecture = *parse_architecture(opt.arch);
    }
    return scenario;
}

std::pair<UtilisationProfile, AmbientProfile> load_profiles(const Options& opt) {
    return {parse_file(opt.utilisation, parse_utilisation_csv), parse_file(opt.weather, parse_temperature_csv)};
}

void cmd_simulate(const Options& opt, std::ostream& out) {
    const ScenarioConfig scenario = load_scenario(opt);
    const auto [util, weather] = load_profiles(opt);
    const SimulationResult result = simulate(util, weather, scenario);

    PendingWrites writes;
    writes.add(opt.out, write_results_csv(result));
    if (!opt.svg.empty()) {
        writes.add(opt.svg, results_svg(result));
    }
    writes.commit();

    out << "component,energy_wh,share\n";
    for (std::size_t c = 0; c < kComponentCount; ++c) {
        out << fmt::format("{},{},{}\n", to_string(static_cast<Component>(c)), format_number(result.energy.energy_wh[c]),
                           format_number(result.energy.shares[c]));
    }
    out << fmt::format("total,{},1\n", format_number(result.energy.total_wh));
}

void cmd_peak(const Options& opt, std::ostream& out) {
    const ScenarioConfig scenario = load_scenario(opt);
    const PeakContext ctx = peak_context(scenario);
    const PowerBreakdown peak = step_power(1.0, scenario.reference_ambient_c, scenario, ctx);
    const ComponentValues share = shares(peak);
    const ComponentValues power = peak.components();
    out << "component,power_w,share\n";
    for (std::size_t c = 0; c < kComponentCount; ++c) {
        out << fmt::format("{},{},{}\n", to_string(static_cast<Component>(c)), format_number(power[c]),
                           format_number(share[c]));
    }
    out << fmt::format("total,{},1\n", format_number(peak.total_w));
}

void cmd_curtail(const Options& opt, std::ostream& out) {
    const ScenarioConfig scenario = load_scenario(opt);
    const PeakContext ctx = peak_context(scenario);
    const CurtailmentSolution sol = curtail(opt.target_w, opt.ambient_c, scenario, ctx);
    out << fmt::format("utilisation,{}\n", format_number(sol.required_utilisation));
    out << fmt::format("achieved_w,{}\n", format_number(sol.achieved_total_w));
    out << fmt::format("target_w,{}\n", format_number(sol.target_total_w));
    out << fmt::format("feasible,{}\n", sol.feasible ? "true" : "false");
}

void cmd_curve(const Options& opt, std::ostream& out) {
    const ScenarioConfig scenario = load_scenario(opt);
    const auto curves = power_curve(opt.temps, scenario, opt.points);
    PendingWrites writes;
    writes.add(opt.out, write_curve_csv(curves));
    if (!opt.svg.empty()) {
        writes.add(opt.svg, curves_svg(curves));
    }
    writes.commit();
    out << fmt::format("curves,{}\npoints,{}\n", curves.size(), opt.points);
}

void cmd_compare(const Options& opt, std::ostream& out) {
    const ScenarioConfig scenario = load_scenario(opt);
    const auto [util, weather] = load_profiles(opt);
    const ArchitectureComparison cmp = compare_architectures(util, weather, scenario);
    PendingWrites writes;
    writes.add(opt.out, write_comparison_csv(cmp));
    if (!opt.svg.empty()) {
        writes.add(opt.svg, comparison_svg(cmp));
    }
    writes.commit();
    out << fmt::format("{}_cooling_wh,{}\n", to_string(cmp.baseline), format_number(cmp.baseline_cooling_wh));
    out << fmt::format("{}_cooling_wh,{}\n", to_string(cmp.alternative), format_number(cmp.alternative_cooling_wh));
    out << fmt::format("relative_increase,{}\n", format_number(cmp.relative_increase));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Data-centre power consumption simulator"};
    app.name(args.empty() ? "dcsim" : args.front());
    app.require_subcommand(1);

    Options opt;
    const auto arch_check = CLI::IsMember({"crah_chiller", "crac", "free_air"});

    auto* simulate_cmd = app.add_subcommand("simulate", "Hourly power breakdown over utilisation and weather profiles");
    simulate_cmd->add_option("--config", opt.config, "Scenario config file")->required();
    simulate_cmd->add_option("--utilisation", opt.utilisation, "Utilisation CSV")->required();
    simulate_cmd->add_option("--weather", opt.weather, "Weather CSV")->required();
    simulate_cmd->add_option("--out", opt.out, "Results CSV")->required();
    simulate_cmd->add_option("--svg", opt.svg, "Optional stacked-area chart");

    auto* peak_cmd = app.add_subcommand("peak", "Breakdown at full utilisation and reference ambient");
    peak_cmd->add_option("--config", opt.config, "Scenario config file")->required();
    peak_cmd->add_option("--arch", opt.arch, "Cooling architecture override")->check(arch_check);

    auto* curtail_cmd = app.add_subcommand("curtail", "Utilisation needed to reach a total-power target");
    curtail_cmd->add_option("--config", opt.config, "Scenario config file")->required();
    curtail_cmd->add_option("--ambient-c", opt.ambient_c, "Outdoor temperature (C)")
        ->required()
        ->check(CLI::Range(kMinAmbientC, kMaxAmbientC));
    curtail_cmd->add_option("--target-w", opt.target_w, "Total power target (W)")
        ->required()
        ->check(CLI::PositiveNumber);

    auto* curve_cmd = app.add_subcommand("curve", "Total power vs utilisation at fixed temperatures");
    curve_cmd->add_option("--config", opt.config, "Scenario config file")->required();
    curve_cmd->add_option("--temps", opt.temps, "Comma-separated temperatures (C)")
        ->required()
        ->delimiter(',')
        ->check(CLI::Range(kMinAmbientC, kMaxAmbientC));
    curve_cmd->add_option("--points", opt.points, "Grid points on [0, 1]")
        ->capture_default_str()
        ->check(CLI::Range(2, 1000000));
    curve_cmd->add_option("--out", opt.out, "Curve CSV")->required();
    curve_cmd->add_option("--svg", opt.svg, "Optional line chart");
    curve_cmd->add_option("--arch", opt.arch, "Cooling architecture override")->check(arch_check);

    auto* compare_cmd = app.add_subcommand("compare", "Cooling power of chilled-water CRAH vs CRAC");
    compare_cmd->add_option("--config", opt.config, "Scenario config file")->required();
    compare_cmd->add_option("--utilisation", opt.utilisation, "Utilisation CSV")->required();
    compare_cmd->add_option("--weather", opt.weather, "Weather CSV")->required();
    compare_cmd->add_option("--out", opt.out, "Comparison CSV")->required();
    compare_cmd->add_option("--svg", opt.svg, "Optional line chart");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    for (const auto& a : args) argv.push_back(a.c_str());
    if (argv.empty()) argv.push_back("dcsim");

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        err << "run with --help for usage\n";
        return kExitUsage;
    }

    try {
        if (simulate_cmd->parsed()) {
            cmd_simulate(opt, out);
        } else if (peak_cmd->parsed()) {
            cmd_peak(opt, out);
        } else if (curtail_cmd->parsed()) {
            cmd_curtail(opt, out);
        } else if (curve_cmd->parsed()) {
            cmd_curve(opt, out);
        } else if (compare_cmd->parsed()) {
            cmd_compare(opt, out);
        }
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
        return kExitData;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitOk;
}

}  // namespace dcsim::cli
