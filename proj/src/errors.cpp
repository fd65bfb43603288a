#include "navlm/errors.hpp"

namespace navlm {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::MalformedDocument: return "MalformedDocument";
        case ErrorCode::AsymmetricAdjacency: return "AsymmetricAdjacency";
        case ErrorCode::UnknownNodeReference: return "UnknownNodeReference";
        case ErrorCode::MissingObservation: return "MissingObservation";
        case ErrorCode::IsolatedNode: return "IsolatedNode";
        case ErrorCode::IllegalMove: return "IllegalMove";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::MalformedRecord: return "MalformedRecord";
        case ErrorCode::PathNotInGraph: return "PathNotInGraph";
        case ErrorCode::BackendFailure: return "BackendFailure";
        case ErrorCode::PlaceholderLost: return "PlaceholderLost";
        case ErrorCode::MissingCounterpart: return "MissingCounterpart";
        case ErrorCode::StructuralMismatch: return "StructuralMismatch";
        case ErrorCode::ContextOverflow: return "ContextOverflow";
        case ErrorCode::TransportFailure: return "TransportFailure";
        case ErrorCode::RateLimited: return "RateLimited";
        case ErrorCode::LanguageMismatch: return "LanguageMismatch";
        case ErrorCode::EmptyCandidates: return "EmptyCandidates";
        case ErrorCode::EmptySuite: return "EmptySuite";
        case ErrorCode::ConfigError: return "ConfigError";
    }
    return "UnknownError";
}

} // namespace navlm
