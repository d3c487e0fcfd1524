#include "monoinv/error.hpp"

namespace monoinv {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::NonMonotone: return "NonMonotone";
        case ErrorKind::ConstantFunction: return "ConstantFunction";
        case ErrorKind::UnorderedBreakpoints: return "UnorderedBreakpoints";
        case ErrorKind::InconsistentBreakpoints: return "InconsistentBreakpoints";
        case ErrorKind::InvalidInterval: return "InvalidInterval";
        case ErrorKind::EmptyInterval: return "EmptyInterval";
        case ErrorKind::InvalidMeasure: return "InvalidMeasure";
        case ErrorKind::ZeroMeasure: return "ZeroMeasure";
        case ErrorKind::AnchorOutsideCarrier: return "AnchorOutsideCarrier";
        case ErrorKind::NotAbsolutelyContinuous: return "NotAbsolutelyContinuous";
        case ErrorKind::VersionAmbiguous: return "VersionAmbiguous";
        case ErrorKind::CarrierMismatch: return "CarrierMismatch";
        case ErrorKind::PreconditionFailed: return "PreconditionFailed";
        case ErrorKind::QfNotAbsolutelyContinuous: return "QfNotAbsolutelyContinuous";
        case ErrorKind::InternalInconsistency: return "InternalInconsistency";
        case ErrorKind::UnknownLaw: return "UnknownLaw";
    }
    return "Unknown";
}

}  // namespace monoinv
