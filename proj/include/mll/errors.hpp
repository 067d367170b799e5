#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mll {

// Base of every error the library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Index outside the valid range of a matrix or container.
class BoundsError : public Error {
public:
    using Error::Error;
};

// Precondition violation on an argument value (bad shape, bad parameter).
class ArgumentError : public Error {
public:
    using Error::Error;
};

// Malformed input text; carries the 1-based line number when known.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    explicit ParseError(const std::string& msg) : Error(msg), line_(0) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Input is well-formed but violates the expected schema (e.g. a label
// attribute whose values are not {0,1}).
class SchemaError : public Error {
public:
    using Error::Error;
};

// Numeric data unusable by an algorithm (NaN / infinity in features).
class DataError : public Error {
public:
    using Error::Error;
};

// Structurally valid input on which the operation is undefined
// (zero-sized matrix, edgeless graph).
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

// A bounded random sampling procedure exhausted its retry budget.
class SamplingError : public Error {
public:
    using Error::Error;
};

// Bad command line or config file contents.
class UsageError : public Error {
public:
    using Error::Error;
};

}  // namespace mll
