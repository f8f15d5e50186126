#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dcsim {

enum class ErrorKind {
    MalformedRow,
    OutOfRange,
    NonMonotonicTime,
    GapInSeries,
    EmptyProfile,
    EmptyList,
    EmptyResult,
    UnknownKey,
    MissingRequired,
    InvariantViolation,
    NegativeInput,
    InfeasibleTarget,
    InvertedTemperatures,
    InvalidFractions,
    ProfileMismatch,
};

std::string_view to_string(ErrorKind kind);

/// Every model and parser failure surfaces as this exception. The kind is
/// stable and testable; the message is for humans (it names the row, key or
/// quantity that failed).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace dcsim
