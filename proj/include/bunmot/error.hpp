#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bunmot {

enum class ErrorKind {
    // curve_arith
    BadLength,
    FunctionalEquationViolated,
    BadLeadingCoefficient,
    NonPositiveJacCount,
    PoleAtArgument,
    BadCurveData,
    // motring
    EmptyWindow,
    UnboundedWindow,
    NonConvergentDirection,
    WindowUnboundedMismatch,
    GenusMismatch,
    UnboundGenus,
    // quot_bb
    UnstableRegime,
    BadComposition,
    // hn_strata
    BadHNType,
    NegativeRank,
    // bun_formulas
    NegativeN,
    // shell
    SyntaxError,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace bunmot
