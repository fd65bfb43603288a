#pragma once

#include <stdexcept>
#include <string>

namespace navlm {

// Failure categories surfaced by the harness. Parse failures are values
// (see react_parser.hpp), everything else is thrown as Error.
enum class ErrorCode {
    MalformedDocument,
    AsymmetricAdjacency,
    UnknownNodeReference,
    MissingObservation,
    IsolatedNode,
    IllegalMove,
    Disconnected,
    MalformedRecord,
    PathNotInGraph,
    BackendFailure,
    PlaceholderLost,
    MissingCounterpart,
    StructuralMismatch,
    ContextOverflow,
    TransportFailure,
    RateLimited,
    LanguageMismatch,
    EmptyCandidates,
    EmptySuite,
    ConfigError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

} // namespace navlm
