#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kgwb {

// Failure categories surfaced to callers. The names are part of the wire
// contract: the HTTP layer reports them verbatim in {"error":{"code":...}}.
enum class ErrorCode {
    InvalidArgument,
    NotFound,
    DuplicateId,
    EmptyTypeLabel,
    UnknownEndpoint,
    UnreadableInput,
    SyntaxError,
    UnboundVariable,
    SpanOutOfRange,
    UnknownType,
    UnknownSession,
    UnknownNode,
    UnknownCandidate,
    TypeMismatch,
    SessionMerged,
    MissingProposal,
    AlreadyMerged,
    UnknownEdgeTarget,
    UnknownOperation,
    UnknownParent,
    PortInUse,
    BadDataDir,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Raised by the query parser. `position` is a byte offset into the query text.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, std::string expected, const std::string& message)
        : Error(ErrorCode::SyntaxError, message),
          position_(position),
          expected_(std::move(expected)) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

}  // namespace kgwb
