#include "ellrc/errors.hpp"

namespace ellrc {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::FieldTooLarge: return "FieldTooLarge";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::NoSuchRoot: return "NoSuchRoot";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::SingularCurve: return "SingularCurve";
        case ErrorKind::StructureInconsistent: return "StructureInconsistent";
        case ErrorKind::NoSuchSubgroup: return "NoSuchSubgroup";
        case ErrorKind::NoCurveFound: return "NoCurveFound";
        case ErrorKind::ZeroDenominator: return "ZeroDenominator";
        case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
        case ErrorKind::PoleError: return "PoleError";
        case ErrorKind::NotAnEndomorphism: return "NotAnEndomorphism";
        case ErrorKind::DegenerateDivisor: return "DegenerateDivisor";
        case ErrorKind::NotInSpace: return "NotInSpace";
        case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
        case ErrorKind::NotASubgroup: return "NotASubgroup";
        case ErrorKind::InvariantSpaceDimension: return "InvariantSpaceDimension";
        case ErrorKind::ExistenceFailure: return "ExistenceFailure";
        case ErrorKind::NotEnoughFibers: return "NotEnoughFibers";
        case ErrorKind::RankMismatch: return "RankMismatch";
        case ErrorKind::SubgroupsIntersect: return "SubgroupsIntersect";
        case ErrorKind::TorsionConditionFailed: return "TorsionConditionFailed";
        case ErrorKind::SingularRepairMatrix: return "SingularRepairMatrix";
        case ErrorKind::MissingSymbols: return "MissingSymbols";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::HypothesisViolation: return "HypothesisViolation";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

bool is_hypothesis_error(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::StructureInconsistent:
        case ErrorKind::InvariantSpaceDimension:
        case ErrorKind::ExistenceFailure:
        case ErrorKind::RankMismatch:
        case ErrorKind::SingularRepairMatrix:
        case ErrorKind::PrecisionExhausted:
            return false;
        default:
            return true;
    }
}

}  // namespace ellrc
