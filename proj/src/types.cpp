#include "contin/types.hpp"

namespace contin {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::OutOfDisk: return "OutOfDisk";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::DegenerateOrder: return "DegenerateOrder";
        case ErrorCode::InsufficientOrder: return "InsufficientOrder";
        case ErrorCode::CenterMismatch: return "CenterMismatch";
        case ErrorCode::StalledLoop: return "StalledLoop";
        case ErrorCode::SectorViolation: return "SectorViolation";
        case ErrorCode::OverlapMismatch: return "OverlapMismatch";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::MultipleZero: return "MultipleZero";
        case ErrorCode::PoleAtNonpositiveInteger: return "PoleAtNonpositiveInteger";
        case ErrorCode::DomainViolation: return "DomainViolation";
        case ErrorCode::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
}

bool is_validation_error(ErrorCode c) {
    switch (c) {
        case ErrorCode::Overflow:
        case ErrorCode::StalledLoop:
        case ErrorCode::OverlapMismatch:
        case ErrorCode::NoConvergence:
            return false;
        default:
            return true;
    }
}

}  // namespace contin
