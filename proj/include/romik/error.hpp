#pragma once

#include <stdexcept>
#include <string>

namespace romik {

// Base class for every domain error raised by the library. The CLI maps
// these to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

// A precondition on an argument was violated (bad digit, point off the
// quarter circle, excluded word, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// A bounded search or iteration ran out of budget.
class LimitExceeded : public Error {
public:
    using Error::Error;
};

// An internal invariant failed. Seeing one of these is a bug.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

// Parse failure of textual input (points, words, JSON). The CLI maps these
// to exit code 2.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace romik
