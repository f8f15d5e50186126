#include "dcsim/profiles.hpp"

#include "dcsim/error.hpp"

#include <charconv>
#include <chrono>
#include <cmath>

#include <fmt/format.h>

namespace dcsim {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::MalformedRow: return "MalformedRow";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NonMonotonicTime: return "NonMonotonicTime";
    case ErrorKind::GapInSeries: return "GapInSeries";
    case ErrorKind::EmptyProfile: return "EmptyProfile";
    case ErrorKind::EmptyList: return "EmptyList";
    case ErrorKind::EmptyResult: return "EmptyResult";
    case ErrorKind::UnknownKey: return "UnknownKey";
    case ErrorKind::MissingRequired: return "MissingRequired";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::NegativeInput: return "NegativeInput";
    case ErrorKind::InfeasibleTarget: return "InfeasibleTarget";
    case ErrorKind::InvertedTemperatures: return "InvertedTemperatures";
    case ErrorKind::InvalidFractions: return "InvalidFractions";
    case ErrorKind::ProfileMismatch: return "ProfileMismatch";
    }
    return "Unknown";
}

namespace {

std::optional<int> parse_digits(std::string_view text) {
    int value = 0;
    for (char c : text) {
        if (c < '0' || c > '9') {
            return std::nullopt;
        }
        value = value * 10 + (c - '0');
    }
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::optional<double> parse_double(std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

struct CsvRow {
    std::size_t line = 0;
    Timestamp time;
    double value = 0.0;
};

// Shared reader for the two-column hourly formats.
std::vector<CsvRow> read_hourly_csv(std::string_view text, std::string_view value_column) {
    std::vector<CsvRow> rows;
    std::size_t line_no = 0;
    bool header_seen = false;
    std::size_t pos = 0;
    if (text.substr(0, 3) == "\xEF\xBB\xBF") {
        pos = 3;
    }
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = trim(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (line.empty()) {
            continue;
        }
        if (!header_seen) {
            std::string expected = fmt::format("timestamp,{}", value_column);
            auto comma = line.find(',');
            bool ok = comma != std::string_view::npos &&
                      trim(line.substr(0, comma)) == "timestamp" &&
                      trim(line.substr(comma + 1)) == value_column;
            if (!ok) {
                throw Error(ErrorKind::MalformedRow,
                            fmt::format("line {}: expected header '{}', got '{}'", line_no, expected, line));
            }
            header_seen = true;
            continue;
        }
        auto comma = line.find(',');
        if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
            throw Error(ErrorKind::MalformedRow,
                        fmt::format("line {}: expected 2 fields, got '{}'", line_no, line));
        }
        auto ts = parse_timestamp(trim(line.substr(0, comma)));
        if (!ts) {
            throw Error(ErrorKind::MalformedRow,
                        fmt::format("line {}: bad timestamp '{}'", line_no, trim(line.substr(0, comma))));
        }
        auto value = parse_double(line.substr(comma + 1));
        if (!value) {
            throw Error(ErrorKind::MalformedRow,
                        fmt::format("line {}: bad number '{}'", line_no, trim(line.substr(comma + 1))));
        }
        rows.push_back({line_no, *ts, *value});
    }
    if (!header_seen) {
        throw Error(ErrorKind::EmptyProfile, "input has no header");
    }
    if (rows.empty()) {
        throw Error(ErrorKind::EmptyProfile, "input has a header but no data rows");
    }
    return rows;
}

void check_spacing(Timestamp prev, Timestamp cur, std::string_view where) {
    if (cur.hours <= prev.hours) {
        throw Error(ErrorKind::NonMonotonicTime,
                    fmt::format("{}: timestamp {} does not follow {}", where, format_timestamp(cur),
                                format_timestamp(prev)));
    }
    if (cur.hours != prev.hours + 1) {
        throw Error(ErrorKind::GapInSeries,
                    fmt::format("{}: {} h gap between {} and {}", where, cur.hours - prev.hours,
                                format_timestamp(prev), format_timestamp(cur)));
    }
}

void check_utilisation(double u, std::string_view where) {
    if (!(u >= 0.0 && u <= 1.0)) {
        throw Error(ErrorKind::OutOfRange, fmt::format("{}: utilisation {} outside [0, 1]", where, u));
    }
}

void check_temperature(double t, std::string_view where) {
    if (!(t >= kMinAmbientC && t <= kMaxAmbientC)) {
        throw Error(ErrorKind::OutOfRange,
                    fmt::format("{}: temperature {} C outside [{}, {}]", where, t, kMinAmbientC, kMaxAmbientC));
    }
}

}  // namespace

std::optional<Timestamp> parse_timestamp(std::string_view text) {
    // YYYY-MM-DDTHH:MM
    if (text.size() != 16 || text[4] != '-' || text[7] != '-' || text[10] != 'T' ||
        text[13] != ':') {
        return std::nullopt;
    }
    auto y = parse_digits(text.substr(0, 4));
    auto mo = parse_digits(text.substr(5, 2));
    auto d = parse_digits(text.substr(8, 2));
    auto h = parse_digits(text.substr(11, 2));
    auto mi = parse_digits(text.substr(14, 2));
    if (!y || !mo || !d || !h || !mi || *h > 23 || *mi != 0) {
        return std::nullopt;
    }
    using namespace std::chrono;
    year_month_day ymd{year{*y}, month{static_cast<unsigned>(*mo)}, day{static_cast<unsigned>(*d)}};
    if (!ymd.ok()) {
        return std::nullopt;
    }
    auto days = sys_days{ymd}.time_since_epoch().count();
    return Timestamp{static_cast<std::int64_t>(days) * 24 + *h};
}

std::string format_timestamp(Timestamp ts) {
    using namespace std::chrono;
    std::int64_t day_index = ts.hours >= 0 ? ts.hours / 24 : -((-ts.hours + 23) / 24);
    auto hour = ts.hours - day_index * 24;
    year_month_day ymd{sys_days{days{day_index}}};
    return fmt::format("{:04}-{:02}-{:02}T{:02}:00", static_cast<int>(ymd.year()),
                       static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()), hour);
}

std::string format_number(double value) {
    if (value == 0.0) {
        return "0";
    }
    return fmt::format("{:.10g}", value);
}

void validate(const UtilisationProfile& profile) {
    if (profile.entries.empty()) {
        throw Error(ErrorKind::EmptyProfile, "utilisation profile is empty");
    }
    for (std::size_t i = 0; i < profile.entries.size(); ++i) {
        auto where = fmt::format("utilisation entry {}", i);
        check_utilisation(profile.entries[i].utilisation, where);
        if (i > 0) {
            check_spacing(profile.entries[i - 1].time, profile.entries[i].time, where);
        }
    }
}

void validate(const AmbientProfile& profile) {
    if (profile.entries.empty()) {
        throw Error(ErrorKind::EmptyProfile, "ambient profile is empty");
    }
    for (std::size_t i = 0; i < profile.entries.size(); ++i) {
        auto where = fmt::format("ambient entry {}", i);
        check_temperature(profile.entries[i].temperature_c, where);
        if (i > 0) {
            check_spacing(profile.entries[i - 1].time, profile.entries[i].time, where);
        }
    }
}

UtilisationProfile parse_utilisation_csv(std::string_view text) {
    auto rows = read_hourly_csv(text, "utilisation");
    UtilisationProfile profile;
    profile.entries.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto where = fmt::format("line {}", rows[i].line);
        check_utilisation(rows[i].value, where);
        if (i > 0) {
            check_spacing(rows[i - 1].time, rows[i].time, where);
        }
        profile.entries.push_back({rows[i].time, rows[i].value});
    }
    return profile;
}

AmbientProfile parse_temperature_csv(std::string_view text) {
    auto rows = read_hourly_csv(text, "temperature_c");
    AmbientProfile profile;
    profile.entries.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto where = fmt::format("line {}", rows[i].line);
        check_temperature(rows[i].value, where);
        if (i > 0) {
            check_spacing(rows[i - 1].time, rows[i].time, where);
        }
        profile.entries.push_back({rows[i].time, rows[i].value});
    }
    return profile;
}

std::string write_utilisation_csv(const UtilisationProfile& profile) {
    std::string out = "timestamp,utilisation\n";
    for (const auto& e : profile.entries) {
        out += fmt::format("{},{}\n", format_timestamp(e.time), format_number(e.utilisation));
    }
    return out;
}

std::string write_temperature_csv(const AmbientProfile& profile) {
    std::string out = "timestamp,temperature_c\n";
    for (const auto& e : profile.entries) {
        out += fmt::format("{},{}\n", format_timestamp(e.time), format_number(e.temperature_c));
    }
    return out;
}

UtilisationProfile make_utilisation_profile(Timestamp start, std::span<const double> values) {
    UtilisationProfile profile;
    profile.entries.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        profile.entries.push_back({start + static_cast<std::int64_t>(i), values[i]});
    }
    return profile;
}

AmbientProfile make_ambient_profile(Timestamp start, std::span<const double> values) {
    AmbientProfile profile;
    profile.entries.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        profile.entries.push_back({start + static_cast<std::int64_t>(i), values[i]});
    }
    return profile;
}

}  // namespace dcsim
