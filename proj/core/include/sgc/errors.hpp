#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sgc {

// Base for every error raised on bad input or an unmet precondition.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidModulus : public Error {
public:
    using Error::Error;
};

class InvalidVertex : public Error {
public:
    using Error::Error;
};

class GraphMismatch : public Error {
public:
    using Error::Error;
};

class ArithmeticOverflow : public Error {
public:
    using Error::Error;
};

// A constructive step was asked to run outside the hypotheses that make it
// sound. `clause()` names the failing hypothesis.
class PreconditionError : public Error {
public:
    PreconditionError(std::string op, std::string clause)
        : Error(op + ": precondition failed: " + clause), op_(std::move(op)), clause_(std::move(clause))
    {
    }

    const std::string& op() const noexcept { return op_; }
    const std::string& clause() const noexcept { return clause_; }

private:
    std::string op_;
    std::string clause_;
};

class ParseError : public Error {
public:
    ParseError(std::string source, std::size_t line, const std::string& what)
        : Error(source + ":" + std::to_string(line) + ": " + what), source_(std::move(source)), line_(line)
    {
    }

    const std::string& source() const noexcept { return source_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::string source_;
    std::size_t line_;
};

// Raised when a construction produces an output that fails re-verification.
// Always a bug in this library, never a property of the input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace sgc
