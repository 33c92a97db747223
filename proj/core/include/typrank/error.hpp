#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace typrank {

enum class ErrorKind {
    InvalidArgument,
    OutOfRange,
    DegenerateSpan,
    DegenerateSystem,
    DegeneratePosition,
    DegenerateSurface,
    AmbiguousRoots,
    AmbiguousSystem,
    TrialAmbiguous,
    UnsupportedFormat,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so that
/// the Monte Carlo harness can tell a rejected trial from a programming error.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// True for measure-zero or numerically borderline samples that a Monte Carlo
/// run should tally as rejected instead of aborting.
constexpr bool is_trial_rejection(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::DegenerateSpan:
    case ErrorKind::DegenerateSystem:
    case ErrorKind::DegeneratePosition:
    case ErrorKind::DegenerateSurface:
    case ErrorKind::AmbiguousRoots:
    case ErrorKind::AmbiguousSystem:
    case ErrorKind::TrialAmbiguous:
        return true;
    default:
        return false;
    }
}

} // namespace typrank
