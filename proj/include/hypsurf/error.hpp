#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hypsurf {

enum class ErrorCode {
    // invalid input
    InvalidInput,
    InvalidDiskPoint,
    CoincidentPoints,
    EmptySet,
    NonpositiveLength,
    IdentityInput,
    NotHyperbolic,
    OrientationReversing,
    IndexOutOfRange,
    BudgetExceeded,
    EmptySample,
    CirclesOverlap,
    UnderdeterminedChi,
    NoBoundary,
    NonorientableDoubleUnsupported,
    NegativeLength,
    NotHyperbolizable,
    LengthCountMismatch,
    InvalidPlan,
    NotAutomorphism,
    TooFewPoints,
    // numeric failure
    NumericFailure,
    AmbiguousClass,
    LengthMismatch,
    OrderViolation,
    SkipFractionExceeded,
};

enum class ErrorCategory { InvalidInput, NumericFailure };

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::InvalidDiskPoint: return "InvalidDiskPoint";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::NonpositiveLength: return "NonpositiveLength";
    case ErrorCode::IdentityInput: return "IdentityInput";
    case ErrorCode::NotHyperbolic: return "NotHyperbolic";
    case ErrorCode::OrientationReversing: return "OrientationReversing";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::EmptySample: return "EmptySample";
    case ErrorCode::CirclesOverlap: return "CirclesOverlap";
    case ErrorCode::UnderdeterminedChi: return "UnderdeterminedChi";
    case ErrorCode::NoBoundary: return "NoBoundary";
    case ErrorCode::NonorientableDoubleUnsupported: return "NonorientableDoubleUnsupported";
    case ErrorCode::NegativeLength: return "NegativeLength";
    case ErrorCode::NotHyperbolizable: return "NotHyperbolizable";
    case ErrorCode::LengthCountMismatch: return "LengthCountMismatch";
    case ErrorCode::InvalidPlan: return "InvalidPlan";
    case ErrorCode::NotAutomorphism: return "NotAutomorphism";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::NumericFailure: return "NumericFailure";
    case ErrorCode::AmbiguousClass: return "AmbiguousClass";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::OrderViolation: return "OrderViolation";
    case ErrorCode::SkipFractionExceeded: return "SkipFractionExceeded";
    }
    return "Unknown";
}

constexpr ErrorCategory category(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::NumericFailure:
    case ErrorCode::AmbiguousClass:
    case ErrorCode::LengthMismatch:
    case ErrorCode::OrderViolation:
    case ErrorCode::SkipFractionExceeded:
        return ErrorCategory::NumericFailure;
    default:
        return ErrorCategory::InvalidInput;
    }
}

/// Every failure raised by the library. The code decides the CLI exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    ErrorCategory category() const noexcept { return hypsurf::category(code_); }

private:
    ErrorCode code_;
};

/// Raised by realize() when glued cuffs disagree; carries the offending gluing indices.
class LengthMismatchError : public Error {
public:
    LengthMismatchError(std::vector<std::size_t> gluings, const std::string& message)
        : Error(ErrorCode::LengthMismatch, message), gluings_(std::move(gluings)) {}

    const std::vector<std::size_t>& gluings() const noexcept { return gluings_; }

private:
    std::vector<std::size_t> gluings_;
};

/// Raised when a sampled circle map breaks cyclic order; carries the sample indices.
class OrderViolationError : public Error {
public:
    OrderViolationError(std::array<std::size_t, 3> triple, const std::string& message)
        : Error(ErrorCode::OrderViolation, message), triple_(triple) {}

    const std::array<std::size_t, 3>& triple() const noexcept { return triple_; }

private:
    std::array<std::size_t, 3> triple_;
};

}  // namespace hypsurf
