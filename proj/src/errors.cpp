#include "springer/errors.hpp"

namespace springer {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::MalformedSpec: return "MalformedSpec";
        case ErrorCode::NotSimplyConnected: return "NotSimplyConnected";
        case ErrorCode::NonCartan: return "NonCartan";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotInvertible: return "NotInvertible";
        case ErrorCode::NotRegularSemisimple: return "NotRegularSemisimple";
        case ErrorCode::InconclusiveTruncation: return "InconclusiveTruncation";
        case ErrorCode::RankTooLarge: return "RankTooLarge";
        case ErrorCode::NotIntegral: return "NotIntegral";
        case ErrorCode::DetClassMismatch: return "DetClassMismatch";
        case ErrorCode::NoIntegralDominator: return "NoIntegralDominator";
        case ErrorCode::AbelianizationMismatch: return "AbelianizationMismatch";
        case ErrorCode::WeylGroupTooLarge: return "WeylGroupTooLarge";
        case ErrorCode::EmptyFiber: return "EmptyFiber";
        case ErrorCode::NotZeroTwisted: return "NotZeroTwisted";
        case ErrorCode::CriteriaDisagree: return "CriteriaDisagree";
        case ErrorCode::SuiteFailed: return "SuiteFailed";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

bool is_input_error(ErrorCode c) {
    return c == ErrorCode::MalformedSpec || c == ErrorCode::NonCartan ||
           c == ErrorCode::NotSimplyConnected;
}

void fail(ErrorCode code, const std::string& what) {
    throw SpringerError(code, what);
}

}  // namespace springer
