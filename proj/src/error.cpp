#include "swc/error.hpp"

namespace swc {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidDirection: return "InvalidDirection";
        case ErrorCode::NotPairwiseIndependent: return "NotPairwiseIndependent";
        case ErrorCode::NotSpanning: return "NotSpanning";
        case ErrorCode::DimensionError: return "DimensionError";
        case ErrorCode::UnsupportedOrientation: return "UnsupportedOrientation";
        case ErrorCode::DegenerateGhost: return "DegenerateGhost";
        case ErrorCode::InvalidParameter: return "InvalidParameter";
        case ErrorCode::InvalidProfileSet: return "InvalidProfileSet";
        case ErrorCode::OutOfGrid: return "OutOfGrid";
        case ErrorCode::DegeneratePolygon: return "DegeneratePolygon";
        case ErrorCode::DegenerateFunctional: return "DegenerateFunctional";
        case ErrorCode::ResourceLimit: return "ResourceLimit";
        case ErrorCode::InternalError: return "InternalError";
    }
    return "Unknown";
}

}  // namespace swc
