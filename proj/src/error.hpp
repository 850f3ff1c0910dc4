#pragma once

#include <stdexcept>
#include <string>

namespace tokenslide {

enum class ErrorCode {
    IndexOutOfRange = 1,
    LoopEdge,
    NExceedsWidth,
    CycleTooSmall,
    SubsetViolation,
    NTooLarge,
    MalformedGraph6,
    MalformedInput,
    ExplosionCap,
    NotSplit,
    NotConnected,
    NotIndependent,
    NExceedsK,
    ConditionViolated,
    KMismatch,
    TooLargeForIso,
    UniverseOverlap,
    NoStableSetOfSizeK,
    TooFewPoints,
    TooManyPoints,
    DegenerateSegment,
    GeneralPositionViolated,
    CoordinateRange,
    UnknownSearch,
    InvalidArgument,
    Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace tokenslide
