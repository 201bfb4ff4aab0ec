#ifndef MONOREG_ERRORS_HPP
#define MONOREG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace monoreg {

// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (JSON documents, input-string literals).
struct ParseError : Error {
    using Error::Error;
};

// A structural invariant of an automaton, network or behavior is violated.
struct ValidationError : Error {
    using Error::Error;
};

// An argument lies outside the declared domain of an operation
// (symbol not over the input set, unknown neuron, empty string where a
// nonempty one is required).
struct InputDomainError : Error {
    using Error::Error;
};

// A construction was asked for outside its precondition
// (e.g. zero-delay compilation of a non-converging language).
struct PreconditionError : Error {
    using Error::Error;
};

// An enumeration or state budget would be exceeded.
struct SizeError : Error {
    using Error::Error;
};

} // namespace monoreg

#endif
