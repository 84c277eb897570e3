#include "zk/error.hpp"

namespace zk {

const char* to_string(ErrorKind kind)
{
    switch (kind)
    {
        case ErrorKind::InvalidVertex: return "InvalidVertex";
        case ErrorKind::NotDownwardClosed: return "NotDownwardClosed";
        case ErrorKind::NotAFace: return "NotAFace";
        case ErrorKind::NotAComplex: return "NotAComplex";
        case ErrorKind::NotACycle: return "NotACycle";
        case ErrorKind::LNotInJ: return "LNotInJ";
        case ErrorKind::OverlappingSupport: return "OverlappingSupport";
        case ErrorKind::NotNestedForm: return "NotNestedForm";
        case ErrorKind::DuplicateVertex: return "DuplicateVertex";
        case ErrorKind::ArityError: return "ArityError";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InvalidDocument: return "InvalidDocument";
        case ErrorKind::InternalInvariant: return "InternalInvariant";
    }
    return "Unknown";
}

}   // namespace zk
