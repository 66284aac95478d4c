#pragma once

#include <stdexcept>
#include <string>

namespace rescurv {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Graph construction and parsing. `line` is 1-based; 0 means the error is
// not tied to a specific input line (programmatic construction).
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line = 0)
        : Error(line > 0 ? what + " (line " + std::to_string(line) + ")" : what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class EmptyInputError : public ParseError {
public:
    using ParseError::ParseError;
};

class MalformedLineError : public ParseError {
public:
    using ParseError::ParseError;
};

class SelfLoopError : public ParseError {
public:
    using ParseError::ParseError;
};

class DuplicateEdgeError : public ParseError {
public:
    using ParseError::ParseError;
};

class DisconnectedError : public ParseError {
public:
    using ParseError::ParseError;
};

// Numerical kernels.
class NotPositiveDefiniteError : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public Error {
public:
    using Error::Error;
};

class NoConvergenceError : public Error {
public:
    using Error::Error;
};

// Domain operations.
class BadParamsError : public Error {
public:
    using Error::Error;
};

class NoClosedFormError : public Error {
public:
    using Error::Error;
};

class ZeroTotalCurvatureError : public Error {
public:
    using Error::Error;
};

class SameVertexError : public Error {
public:
    using Error::Error;
};

class BadMeasureError : public Error {
public:
    using Error::Error;
};

} // namespace rescurv
