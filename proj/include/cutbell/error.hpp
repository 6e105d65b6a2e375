#pragma once

#include <stdexcept>
#include <string>

namespace cutbell {

enum class ErrorCode {
    ZeroInequality,
    EdgeAbsent,
    AdjacencyViolation,
    TooLarge,
    DimensionMismatch,
    GraphMismatch,
    NotAutomorphism,
    NotSubgraph,
    StepMismatch,
    VerificationFailed,
    NotNoSignaling,
    WeightSumInvalid,
    UnknownFixture,
    NotValid,
    ResourceLimit,
    SettingMismatch,
    ParseError,
};

inline const char* error_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::ZeroInequality: return "ZeroInequality";
    case ErrorCode::EdgeAbsent: return "EdgeAbsent";
    case ErrorCode::AdjacencyViolation: return "AdjacencyViolation";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::GraphMismatch: return "GraphMismatch";
    case ErrorCode::NotAutomorphism: return "NotAutomorphism";
    case ErrorCode::NotSubgraph: return "NotSubgraph";
    case ErrorCode::StepMismatch: return "StepMismatch";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::NotNoSignaling: return "NotNoSignaling";
    case ErrorCode::WeightSumInvalid: return "WeightSumInvalid";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::NotValid: return "NotValid";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::SettingMismatch: return "SettingMismatch";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace cutbell
