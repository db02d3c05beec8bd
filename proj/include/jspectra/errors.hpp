#pragma once

#include <stdexcept>
#include <string>

namespace jspectra {

enum class ErrorCode {
    NonSquare,
    NotSymmetric,
    NoConvergence,
    EmptyInput,
    DimensionMismatch,
    InvalidBound,
    EmptyGrid,
    ZeroVector,
    DimensionTooSmall,
    LambdaInSpectrumD,
    BstarXZero,
    TooCloseToSigmaD,
    LambdaNotAboveDeltaPlus,
    IntervalNotAboveMu,
    NonNegativeC,
    SingularSchur,
    IndexOutOfRange,
    NoEigenvalue,
    MaxIterations,
    NotOrthonormal,
    IndexExceedsNu,
    StrictANotSatisfied,
    GammaOutsideGap,
    GridTooSmall,
    NegativeWeight,
    ParseError,
};

const char* error_code_name(ErrorCode code);

/// Exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace jspectra
