#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace liepm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    using Error::Error;
};

/// The designated pair (x, y) does not generate the algebra.
class NotGenerating : public Error {
public:
    using Error::Error;
};

/// A degree-filtered linear system had no solution. For valid inputs this is a
/// counterexample to XYX spanning and is reported, never swallowed.
class NoSolution : public Error {
public:
    using Error::Error;
};

/// {x, y, [x,y]} is linearly dependent, so [z,x] = ax + by + cz is undefined.
class DegenerateBasis : public Error {
public:
    using Error::Error;
};

class HypothesisFailed : public Error {
public:
    HypothesisFailed(std::string hypothesis, const std::string& what)
        : Error(hypothesis + ": " + what), hypothesis_(std::move(hypothesis)) {}

    const std::string& hypothesis() const noexcept { return hypothesis_; }

private:
    std::string hypothesis_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace liepm
