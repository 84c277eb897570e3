#ifndef ZK_ERROR_HPP
#define ZK_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zk {

enum class ErrorKind
{
    InvalidVertex,
    NotDownwardClosed,
    NotAFace,
    NotAComplex,
    NotACycle,
    LNotInJ,
    OverlappingSupport,
    NotNestedForm,
    DuplicateVertex,
    ArityError,
    ParseError,
    InvalidDocument,
    InternalInvariant
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error
{
    public:
        Error(ErrorKind kind, const std::string& message)
            : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

        ErrorKind kind() const { return kind_; }

    private:
        ErrorKind kind_;
};

/// Syntax error in a bracket expression or chain expression; carries the
/// 0-based character offset of the offending token.
class ParseError : public Error
{
    public:
        ParseError(std::size_t position, const std::string& message)
            : Error(ErrorKind::ParseError, message + " at position " + std::to_string(position)),
              position_(position) {}

        std::size_t position() const { return position_; }

    private:
        std::size_t position_;
};

}   // namespace zk

#endif
