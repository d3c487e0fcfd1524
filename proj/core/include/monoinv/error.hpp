#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace monoinv {

enum class ErrorKind {
    ParseError,
    NonMonotone,
    ConstantFunction,
    UnorderedBreakpoints,
    InconsistentBreakpoints,
    InvalidInterval,
    EmptyInterval,
    InvalidMeasure,
    ZeroMeasure,
    AnchorOutsideCarrier,
    NotAbsolutelyContinuous,
    VersionAmbiguous,
    CarrierMismatch,
    PreconditionFailed,
    QfNotAbsolutelyContinuous,
    InternalInconsistency,
    UnknownLaw,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this exception; kind() is stable
// and is what callers (and the CLI exit-code mapping) branch on.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace monoinv
