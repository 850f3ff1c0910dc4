#include "error.hpp"

namespace tokenslide {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::LoopEdge: return "LoopEdge";
        case ErrorCode::NExceedsWidth: return "NExceedsWidth";
        case ErrorCode::CycleTooSmall: return "CycleTooSmall";
        case ErrorCode::SubsetViolation: return "SubsetViolation";
        case ErrorCode::NTooLarge: return "NTooLarge";
        case ErrorCode::MalformedGraph6: return "MalformedGraph6";
        case ErrorCode::MalformedInput: return "MalformedInput";
        case ErrorCode::ExplosionCap: return "ExplosionCap";
        case ErrorCode::NotSplit: return "NotSplit";
        case ErrorCode::NotConnected: return "NotConnected";
        case ErrorCode::NotIndependent: return "NotIndependent";
        case ErrorCode::NExceedsK: return "NExceedsK";
        case ErrorCode::ConditionViolated: return "ConditionViolated";
        case ErrorCode::KMismatch: return "KMismatch";
        case ErrorCode::TooLargeForIso: return "TooLargeForIso";
        case ErrorCode::UniverseOverlap: return "UniverseOverlap";
        case ErrorCode::NoStableSetOfSizeK: return "NoStableSetOfSizeK";
        case ErrorCode::TooFewPoints: return "TooFewPoints";
        case ErrorCode::TooManyPoints: return "TooManyPoints";
        case ErrorCode::DegenerateSegment: return "DegenerateSegment";
        case ErrorCode::GeneralPositionViolated: return "GeneralPositionViolated";
        case ErrorCode::CoordinateRange: return "CoordinateRange";
        case ErrorCode::UnknownSearch: return "UnknownSearch";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace tokenslide
