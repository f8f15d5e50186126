#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dcsim {

/// Hour-resolution timestamp without timezone. Stored as whole hours since
/// 1970-01-01T00:00 so spacing checks are integer arithmetic.
struct Timestamp {
    std::int64_t hours = 0;

    friend auto operator<=>(const Timestamp&, const Timestamp&) = default;
};

/// Parses `YYYY-MM-DDTHH:MM`. Minutes must be `00`.
std::optional<Timestamp> parse_timestamp(std::string_view text);
std::string format_timestamp(Timestamp ts);

inline Timestamp operator+(Timestamp ts, std::int64_t hours) { return Timestamp{ts.hours + hours}; }

struct UtilisationSample {
    Timestamp time;
    double utilisation = 0.0;
};

struct AmbientSample {
    Timestamp time;
    double temperature_c = 0.0;
};

struct UtilisationProfile {
    std::vector<UtilisationSample> entries;
};

struct AmbientProfile {
    std::vector<AmbientSample> entries;
};

inline constexpr double kMinAmbientC = -60.0;
inline constexpr double kMaxAmbientC = 60.0;

// Throw dcsim::Error when a profile built in code breaks the same rules the
// parsers enforce (range, strictly increasing, exact one-hour spacing).
void validate(const UtilisationProfile& profile);
void validate(const AmbientProfile& profile);

UtilisationProfile parse_utilisation_csv(std::string_view text);
AmbientProfile parse_temperature_csv(std::string_view text);

std::string write_utilisation_csv(const UtilisationProfile& profile);
std::string write_temperature_csv(const AmbientProfile& profile);

/// Builds an hourly profile starting at `start` from consecutive values.
UtilisationProfile make_utilisation_profile(Timestamp start, std::span<const double> values);
AmbientProfile make_ambient_profile(Timestamp start, std::span<const double> values);

/// Shortest round-trippable-to-10-digits decimal rendering used by all CSV writers.
std::string format_number(double value);

}  // namespace dcsim
