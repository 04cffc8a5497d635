#pragma once

#include <stdexcept>
#include <string>

namespace relhull {

enum class Err {
    NonPrimeCharacteristic,
    ReducibleModulus,
    FieldTooLarge,
    MixedFields,
    DivisionByZero,
    ExponentOutOfRange,
    DimensionMismatch,
    ZeroScalingEntry,
    LengthMismatch,
    EmptyGenerator,
    EnumerationTooLarge,
    AlreadyAtLowerBound,
    NoWitnessFound,
    TargetOutOfRange,
    ConditionUnsatisfiable,
    PreconditionViolated,
    IndexOutOfRange,
    OddExtensionDegree,
    DegenerateDelta,
    NotPureInput,
    SandwichViolated,
    ConditionViolated,
    EmptyDifference,
    NotDecreasing,
    DistanceTooSmall,
    WeightOneAmbiguity,
    DOutOfRange,
    ExponentOutOfBox,
    NoTwistFound,
    IncreaseHypothesisNotWitnessed,
    ParseError,
    Internal,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
  public:
    Error(Err code, const std::string& msg)
        : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}

    Err code() const { return code_; }

  private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

}  // namespace relhull
