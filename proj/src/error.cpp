#include "kgwb/error.hpp"

namespace kgwb {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::NotFound: return "NotFound";
        case ErrorCode::DuplicateId: return "DuplicateId";
        case ErrorCode::EmptyTypeLabel: return "EmptyTypeLabel";
        case ErrorCode::UnknownEndpoint: return "UnknownEndpoint";
        case ErrorCode::UnreadableInput: return "UnreadableInput";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::UnboundVariable: return "UnboundVariable";
        case ErrorCode::SpanOutOfRange: return "SpanOutOfRange";
        case ErrorCode::UnknownType: return "UnknownType";
        case ErrorCode::UnknownSession: return "UnknownSession";
        case ErrorCode::UnknownNode: return "UnknownNode";
        case ErrorCode::UnknownCandidate: return "UnknownCandidate";
        case ErrorCode::TypeMismatch: return "TypeMismatch";
        case ErrorCode::SessionMerged: return "SessionMerged";
        case ErrorCode::MissingProposal: return "MissingProposal";
        case ErrorCode::AlreadyMerged: return "AlreadyMerged";
        case ErrorCode::UnknownEdgeTarget: return "UnknownEdgeTarget";
        case ErrorCode::UnknownOperation: return "UnknownOperation";
        case ErrorCode::UnknownParent: return "UnknownParent";
        case ErrorCode::PortInUse: return "PortInUse";
        case ErrorCode::BadDataDir: return "BadDataDir";
    }
    return "Unknown";
}

}  // namespace kgwb
