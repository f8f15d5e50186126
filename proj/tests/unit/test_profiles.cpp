#include "dcsim/config.hpp"
#include "dcsim/engine.hpp"
#include "dcsim/error.hpp"
#include "dcsim/profiles.hpp"
#include "dcsim/results_io.hpp"

#include "../support/oracle.hpp"
#include "../support/synthetic.hpp"

#include <doctest.h>

#include <random>
#include <sstream>
#include <string>

using namespace dcsim;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected dcsim::Error");
    return ErrorKind::MalformedRow;
}

std::string message_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

}  // namespace

TEST_CASE("timestamps") {
    auto ts = parse_timestamp("2016-06-01T00:00");
    REQUIRE(ts);
    CHECK(format_timestamp(*ts) == "2016-06-01T00:00");
    CHECK(parse_timestamp("2016-06-01T01:00")->hours == ts->hours + 1);
    CHECK(parse_timestamp("2016-02-29T23:00").has_value());
    CHECK_FALSE(parse_timestamp("2015-02-29T23:00").has_value());
    CHECK_FALSE(parse_timestamp("2016-06-01T24:00").has_value());
    CHECK_FALSE(parse_timestamp("2016-06-01T10:30").has_value());
    CHECK_FALSE(parse_timestamp("2016-06-01 10:00").has_value());
    CHECK_FALSE(parse_timestamp("2016-6-1T10:00").has_value());
    CHECK(format_timestamp(Timestamp{-1}) == "1969-12-31T23:00");

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::int64_t> hours(-1'000'000, 2'000'000);
    for (int i = 0; i < 1000; ++i) {
        const Timestamp t{hours(rng)};
        CHECK(parse_timestamp(format_timestamp(t)) == t);
    }
}

TEST_CASE("utilisation CSV") {
    const auto p = parse_utilisation_csv("timestamp,utilisation\n2016-06-01T00:00,0.5");
    REQUIRE(p.entries.size() == 1);
    CHECK(p.entries[0].utilisation == 0.5);
    CHECK(format_timestamp(p.entries[0].time) == "2016-06-01T00:00");

    CHECK(parse_utilisation_csv("timestamp,utilisation\r\n2016-06-01T00:00,0.5\r\n2016-06-01T01:00,0.25\r\n\n")
              .entries.size() == 2);

    CHECK(kind_of([] { parse_utilisation_csv("timestamp,utilisation\n2016-06-01T00:00,1.2\n"); }) ==
          ErrorKind::OutOfRange);
    CHECK(kind_of([] {
              parse_utilisation_csv("timestamp,utilisation\n2016-06-01T00:00,0.2\n2016-06-01T03:00,0.3\n");
          }) == ErrorKind::GapInSeries);
    CHECK(kind_of([] {
              parse_utilisation_csv("timestamp,utilisation\n2016-06-01T05:00,0.2\n2016-06-01T04:00,0.3\n");
          }) == ErrorKind::NonMonotonicTime);
    CHECK(kind_of([] {
              parse_utilisation_csv("timestamp,utilisation\n2016-06-01T05:00,0.2\n2016-06-01T05:00,0.3\n");
          }) == ErrorKind::NonMonotonicTime);
    CHECK(kind_of([] { parse_utilisation_csv("timestamp,utilisation\n2016-06-01T00:00,abc\n"); }) ==
          ErrorKind::MalformedRow);
    CHECK(kind_of([] { parse_utilisation_csv("timestamp,utilisation\n2016-06-01,0.1\n"); }) ==
          ErrorKind::MalformedRow);
    CHECK(kind_of([] { parse_utilisation_csv("timestamp,utilisation\n2016-06-01T00:00,0.1,3\n"); }) ==
          ErrorKind::MalformedRow);
    CHECK(kind_of([] { parse_utilisation_csv("time,u\n2016-06-01T00:00,0.1\n"); }) == ErrorKind::MalformedRow);
    CHECK(kind_of([] { parse_utilisation_csv("timestamp,utilisation\n2016-06-01T00:00,nan\n"); }) ==
          ErrorKind::MalformedRow);

    // Diagnostics name the line.
    const std::string msg = message_of([] {
        parse_utilisation_csv("timestamp,utilisation\n2016-06-01T00:00,0.1\n2016-06-01T01:00,0.1\n"
                              "2016-06-01T02:00,7\n");
    });
    CHECK(msg.find("line 4") != std::string::npos);
}

TEST_CASE("temperature CSV") {
    const auto p = parse_temperature_csv("timestamp,temperature_c\n2016-06-01T00:00,30");
    REQUIRE(p.entries.size() == 1);
    CHECK(p.entries[0].temperature_c == 30.0);
    CHECK(parse_temperature_csv("timestamp,temperature_c\n2016-12-01T00:00,-5.5\n").entries[0].temperature_c ==
          -5.5);
    CHECK(kind_of([] { parse_temperature_csv("timestamp,temperature_c\n2016-06-01T00:00,99\n"); }) ==
          ErrorKind::OutOfRange);
    CHECK(kind_of([] { parse_temperature_csv("timestamp,temperature_c\n"); }) == ErrorKind::EmptyProfile);
    CHECK(kind_of([] { parse_temperature_csv(""); }) == ErrorKind::EmptyProfile);
    CHECK(kind_of([] { parse_temperature_csv("timestamp,utilisation\n2016-06-01T00:00,3\n"); }) ==
          ErrorKind::MalformedRow);
}

TEST_CASE("validate profiles built in code") {
    const auto start = synthetic::at("2016-06-01T00:00");
    std::vector<double> ok{0.1, 0.2};
    CHECK_NOTHROW(validate(make_utilisation_profile(start, ok)));
    UtilisationProfile gap = make_utilisation_profile(start, ok);
    gap.entries[1].time = start + 2;
    CHECK(kind_of([&] { validate(gap); }) == ErrorKind::GapInSeries);
    CHECK(kind_of([] { validate(UtilisationProfile{}); }) == ErrorKind::EmptyProfile);
    std::vector<double> cold{-70.0};
    CHECK(kind_of([&] { validate(make_ambient_profile(start, cold)); }) == ErrorKind::OutOfRange);
}

TEST_CASE("results CSV") {
    SimulationResult one;
    SimulationStep step;
    step.time = synthetic::at("2016-06-01T00:00");
    step.utilisation = 0.5;
    step.ambient_c = 30;
    step.power.server_farm_w = 600;
    step.power.misc_w = 400;
    step.power.total_w = 1000;
    one.steps.push_back(step);
    const std::string csv = write_results_csv(one);
    const auto lines = split(csv, '\n');
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == kResultsHeader);
    const auto fields = split(lines[1], ',');
    REQUIRE(fields.size() == 12);
    CHECK(fields[0] == "2016-06-01T00:00");
    CHECK(fields[11] == "1000");

    CHECK(kind_of([] { write_results_csv(SimulationResult{}); }) == ErrorKind::EmptyResult);
}

TEST_CASE("weekly results CSV: cardinality and row sums") {
    const auto start = synthetic::at("2016-06-01T00:00");
    const auto u = synthetic::weekly_utilisation_values();
    const auto t = synthetic::summer_week_temperatures();
    const auto result = simulate(make_utilisation_profile(start, u), make_ambient_profile(start, t),
                                 case_study_scenario());
    const auto lines = split(write_results_csv(result), '\n');
    REQUIRE(lines.size() == 169);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto f = split(lines[i], ',');
        REQUIRE(f.size() == 12);
        double sum = 0.0;
        for (std::size_t c = 3; c < 11; ++c) sum += std::stod(f[c]);
        CHECK(oracle::rel_close(sum, std::stod(f[11]), 1e-9));
    }
}

TEST_CASE("property: profile columns survive a write/parse round trip") {
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> temp(-30.0, 45.0);
    std::uniform_int_distribution<int> len(1, 60);
    const ScenarioConfig scenario = case_study_scenario();
    for (int trial = 0; trial < 25; ++trial) {
        const int n = len(rng);
        std::vector<double> u(static_cast<std::size_t>(n)), t(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            u[static_cast<std::size_t>(i)] = unit(rng);
            t[static_cast<std::size_t>(i)] = temp(rng);
        }
        const Timestamp start{std::uniform_int_distribution<std::int64_t>(0, 500000)(rng)};
        const auto result = simulate(make_utilisation_profile(start, u), make_ambient_profile(start, t), scenario);
        const auto up = parse_utilisation_csv(write_utilisation_csv(utilisation_of(result)));
        const auto ap = parse_temperature_csv(write_temperature_csv(ambient_of(result)));
        REQUIRE(up.entries.size() == static_cast<std::size_t>(n));
        REQUIRE(ap.entries.size() == static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < up.entries.size(); ++i) {
            CHECK(up.entries[i].time == result.steps[i].time);
            CHECK(ap.entries[i].time == result.steps[i].time);
            CHECK(std::abs(up.entries[i].utilisation - u[i]) <= 1e-6 * std::max(1e-300, std::abs(u[i])));
            CHECK(std::abs(ap.entries[i].temperature_c - t[i]) <= 1e-6 * std::abs(t[i]));
        }
    }
}

TEST_CASE("SVG output is well-formed") {
    const auto start = synthetic::at("2016-06-01T00:00");
    const auto u = synthetic::weekly_utilisation_values(24);
    std::vector<double> t(24, 25.0);
    const auto result =
        simulate(make_utilisation_profile(start, u), make_ambient_profile(start, t), case_study_scenario());
    for (const std::string& svg : {results_svg(result)}) {
        CHECK(svg.rfind("<?xml", 0) == 0);
        CHECK(svg.find("<svg") != std::string::npos);
        CHECK(svg.find("</svg>") != std::string::npos);
        CHECK(svg.find("nan") == std::string::npos);
        CHECK(svg.find("server_farm") != std::string::npos);
    }
}
