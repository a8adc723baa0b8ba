#include "dihom/error.hpp"

namespace dihom {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::MalformedPartition: return "MalformedPartition";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::InvalidVertex: return "InvalidVertex";
    case ErrorCode::InvalidSize: return "InvalidSize";
    case ErrorCode::InvalidVariant: return "InvalidVariant";
    case ErrorCode::EmptyComplex: return "EmptyComplex";
    case ErrorCode::FaceNotInComplex: return "FaceNotInComplex";
    case ErrorCode::ArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorCode::EmptyHom: return "EmptyHom";
    case ErrorCode::NotAcyclic: return "NotAcyclic";
    case ErrorCode::InvalidMatching: return "InvalidMatching";
    case ErrorCode::InvalidFold: return "InvalidFold";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::HasLoop: return "HasLoop";
    case ErrorCode::InvalidRange: return "InvalidRange";
    case ErrorCode::InvalidPoset: return "InvalidPoset";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
{
}

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : Error(ErrorCode::ParseError,
            line == 0 ? what : what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
      line_(line), column_(column)
{
}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

} // namespace dihom
