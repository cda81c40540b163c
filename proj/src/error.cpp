#include "bunmot/error.hpp"

namespace bunmot {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::BadLength: return "BadLength";
    case ErrorKind::FunctionalEquationViolated: return "FunctionalEquationViolated";
    case ErrorKind::BadLeadingCoefficient: return "BadLeadingCoefficient";
    case ErrorKind::NonPositiveJacCount: return "NonPositiveJacCount";
    case ErrorKind::PoleAtArgument: return "PoleAtArgument";
    case ErrorKind::BadCurveData: return "BadCurveData";
    case ErrorKind::EmptyWindow: return "EmptyWindow";
    case ErrorKind::UnboundedWindow: return "UnboundedWindow";
    case ErrorKind::NonConvergentDirection: return "NonConvergentDirection";
    case ErrorKind::WindowUnboundedMismatch: return "WindowUnboundedMismatch";
    case ErrorKind::GenusMismatch: return "GenusMismatch";
    case ErrorKind::UnboundGenus: return "UnboundGenus";
    case ErrorKind::UnstableRegime: return "UnstableRegime";
    case ErrorKind::BadComposition: return "BadComposition";
    case ErrorKind::BadHNType: return "BadHNType";
    case ErrorKind::NegativeRank: return "NegativeRank";
    case ErrorKind::NegativeN: return "NegativeN";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace bunmot
