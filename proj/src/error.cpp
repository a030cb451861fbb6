#include "ontomatch/error.hpp"

namespace ontomatch {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::MalformedXml: return "malformed-xml";
    case ErrorCode::EmptyDocument: return "empty-document";
    case ErrorCode::IsaCycle: return "isa-cycle";
    case ErrorCode::EmptyLabel: return "empty-label";
    case ErrorCode::UnknownReference: return "unknown-reference";
    case ErrorCode::DuplicateEntity: return "duplicate-entity";
    case ErrorCode::InvalidArc: return "invalid-arc";
    case ErrorCode::EmptyOntology: return "empty-ontology";
    case ErrorCode::EmptyMatrix: return "empty-matrix";
    case ErrorCode::NonFiniteValue: return "non-finite-value";
    case ErrorCode::SizeLimit: return "size-limit";
    case ErrorCode::MissingHeaderField: return "missing-header-field";
    case ErrorCode::DuplicateHeaderField: return "duplicate-header-field";
    case ErrorCode::MeasureOutOfRange: return "measure-out-of-range";
    case ErrorCode::UnknownRelation: return "unknown-relation";
    case ErrorCode::DuplicateCell: return "duplicate-cell";
    case ErrorCode::EmptyReference: return "empty-reference";
    case ErrorCode::EmptyCategory: return "empty-category";
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::Io: return "io";
    }
    return "unknown";
}

} // namespace ontomatch
