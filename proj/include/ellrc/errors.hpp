#pragma once

#include <stdexcept>
#include <string>

namespace ellrc {

enum class ErrorKind {
    NotPrime,
    FieldTooLarge,
    DivisionByZero,
    NoSuchRoot,
    ParseError,
    SingularCurve,
    StructureInconsistent,
    NoSuchSubgroup,
    NoCurveFound,
    ZeroDenominator,
    PrecisionExhausted,
    PoleError,
    NotAnEndomorphism,
    DegenerateDivisor,
    NotInSpace,
    UnsupportedFamily,
    NotASubgroup,
    InvariantSpaceDimension,
    ExistenceFailure,
    NotEnoughFibers,
    RankMismatch,
    SubgroupsIntersect,
    TorsionConditionFailed,
    SingularRepairMatrix,
    MissingSymbols,
    BudgetExceeded,
    HypothesisViolation,
    InvalidArgument,
};

const char* to_string(ErrorKind kind) noexcept;

/// Errors that are a consequence of the caller's inputs (a violated hypothesis,
/// an unsupported parameter) as opposed to internal invariant failures.
bool is_hypothesis_error(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace ellrc
