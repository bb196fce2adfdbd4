#pragma once
#include <stdexcept>
#include <string>

namespace fillobs {

// Error kinds are stable tokens; the CLI maps them onto exit codes
// (input/grammar problems -> 1, mathematical precondition violations -> 2).
enum class ErrorKind {
    Usage,
    UnknownConstructor,
    Arity,
    ParamRange,
    UnbalancedParens,
    Schema,
    Axiom,
    Dimension,
    Precondition,
    TorsionKunneth,
    Coefficient,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

// True for the kinds that signal malformed input rather than an
// inadmissible mathematical request.
inline bool is_input_error(ErrorKind k) {
    switch (k) {
    case ErrorKind::Usage:
    case ErrorKind::UnknownConstructor:
    case ErrorKind::Arity:
    case ErrorKind::ParamRange:
    case ErrorKind::UnbalancedParens:
    case ErrorKind::Schema:
    case ErrorKind::Axiom:
        return true;
    default:
        return false;
    }
}

} // namespace fillobs
