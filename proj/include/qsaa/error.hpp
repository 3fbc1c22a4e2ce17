#pragma once

#include <stdexcept>
#include <string>

namespace qsaa {

enum class ErrorKind {
    InvalidOrder,
    OrderMismatch,
    DivisionByZero,
    PresentationMismatch,
    InvariantViolation,
    InvalidParameter,
    InvalidInput,
    Resource,
    Torsion,
    NeedsHints,
    NotSimple,
    Unsupported,
    Parse,
};

const char* to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so the CLI can map it
// onto an exit status without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

}  // namespace qsaa
