#ifndef LG_ERRORS_HPP
#define LG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lg {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input-side failures (CLI exit code 2).
struct InputError : Error {
    using Error::Error;
};

struct ParseError : InputError {
    ParseError(const std::string& msg, std::size_t offset)
        : InputError(msg + " (at byte " + std::to_string(offset) + ")"), offset(offset) {}
    std::size_t offset;
};

struct UnknownVariable : InputError {
    using InputError::InputError;
};

struct NegativeExponent : InputError {
    using InputError::InputError;
};

struct InvalidModel : InputError {
    using InputError::InputError;
};

struct NotQuasiHomogeneous : InputError {
    using InputError::InputError;
};

struct WrongModel : InputError {
    using InputError::InputError;
};

// Computation-side failures.
struct NoSolution : Error {
    using Error::Error;
};

struct NotASymmetry : Error {
    using Error::Error;
};

struct GroupTooLarge : Error {
    using Error::Error;
};

struct RuleNotApplicable : Error {
    using Error::Error;
};

struct NotBijective : Error {
    using Error::Error;
};

// Internal invariant violations (CLI exit code 3).
struct InternalError : Error {
    using Error::Error;
};

}  // namespace lg

#endif
