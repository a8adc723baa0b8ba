#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dihom {

enum class ErrorCode {
    SizeCapExceeded,
    MalformedPartition,
    ShapeMismatch,
    InvalidVertex,
    InvalidSize,
    InvalidVariant,
    EmptyComplex,
    FaceNotInComplex,
    ArithmeticOverflow,
    EmptyHom,
    NotAcyclic,
    InvalidMatching,
    InvalidFold,
    NotAHomomorphism,
    Disconnected,
    HasLoop,
    InvalidRange,
    InvalidPoset,
    ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Malformed input text. Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column);
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

} // namespace dihom
