#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ontomatch {

enum class ErrorCode {
    MalformedXml,
    EmptyDocument,
    IsaCycle,
    EmptyLabel,
    UnknownReference,
    DuplicateEntity,
    InvalidArc,
    EmptyOntology,
    EmptyMatrix,
    NonFiniteValue,
    SizeLimit,
    MissingHeaderField,
    DuplicateHeaderField,
    MeasureOutOfRange,
    UnknownRelation,
    DuplicateCell,
    EmptyReference,
    EmptyCategory,
    InvalidArgument,
    Io,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised for XML that is not well-formed. Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(ErrorCode code, const std::string& message, std::size_t line, std::size_t column)
        : Error(code, message + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace ontomatch
