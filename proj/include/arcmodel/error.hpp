#pragma once

#include <stdexcept>
#include <string>

namespace arcmodel {

enum class ErrorKind {
    InvalidParams,
    DegeneratePair,
    NonAdmissible,
    InvalidDegree,
    NoExtension,
    InvalidWindow,
    WindowTooSmall,
    UnsupportedFamilies,
    IncompatibleArc,
    NonAdmissibleImage,
    DNotInFrame,
    DNotInCore,
    UnsupportedFamilyGeometry,
    TriangleMismatch,
    PairCheckFailed,
    ParseError,
    ValidationError,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so that callers
/// (tests, the CLI exit-code mapping) can dispatch without string matching.
class ArcError : public std::runtime_error {
public:
    ArcError(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace arcmodel
