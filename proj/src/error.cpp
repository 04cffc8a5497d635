#include "relhull/error.hpp"

namespace relhull {

const char* err_name(Err e) {
    switch (e) {
        case Err::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
        case Err::ReducibleModulus: return "ReducibleModulus";
        case Err::FieldTooLarge: return "FieldTooLarge";
        case Err::MixedFields: return "MixedFields";
        case Err::DivisionByZero: return "DivisionByZero";
        case Err::ExponentOutOfRange: return "ExponentOutOfRange";
        case Err::DimensionMismatch: return "DimensionMismatch";
        case Err::ZeroScalingEntry: return "ZeroScalingEntry";
        case Err::LengthMismatch: return "LengthMismatch";
        case Err::EmptyGenerator: return "EmptyGenerator";
        case Err::EnumerationTooLarge: return "EnumerationTooLarge";
        case Err::AlreadyAtLowerBound: return "AlreadyAtLowerBound";
        case Err::NoWitnessFound: return "NoWitnessFound";
        case Err::TargetOutOfRange: return "TargetOutOfRange";
        case Err::ConditionUnsatisfiable: return "ConditionUnsatisfiable";
        case Err::PreconditionViolated: return "PreconditionViolated";
        case Err::IndexOutOfRange: return "IndexOutOfRange";
        case Err::OddExtensionDegree: return "OddExtensionDegree";
        case Err::DegenerateDelta: return "DegenerateDelta";
        case Err::NotPureInput: return "NotPureInput";
        case Err::SandwichViolated: return "SandwichViolated";
        case Err::ConditionViolated: return "ConditionViolated";
        case Err::EmptyDifference: return "EmptyDifference";
        case Err::NotDecreasing: return "NotDecreasing";
        case Err::DistanceTooSmall: return "DistanceTooSmall";
        case Err::WeightOneAmbiguity: return "WeightOneAmbiguity";
        case Err::DOutOfRange: return "DOutOfRange";
        case Err::ExponentOutOfBox: return "ExponentOutOfBox";
        case Err::NoTwistFound: return "NoTwistFound";
        case Err::IncreaseHypothesisNotWitnessed: return "IncreaseHypothesisNotWitnessed";
        case Err::ParseError: return "ParseError";
        case Err::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace relhull
