#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cmgen {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input; carries the 1-based line number when one applies.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    explicit ParseError(const std::string& what) : Error(what), line_(0) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Structurally valid input that references something that does not exist.
class IntegrityError : public Error {
public:
    using Error::Error;
};

class LookupError : public Error {
public:
    using Error::Error;
};

class ArgumentError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

/// A quantity is mathematically undefined for the given input (zero vector, zero variance).
class UndefinedError : public Error {
public:
    using Error::Error;
};

class EmptyInputError : public Error {
public:
    using Error::Error;
};

class NoCandidateError : public Error {
public:
    using Error::Error;
};

/// Every admissible choice has been ruled out.
class ExhaustedError : public Error {
public:
    using Error::Error;
};

}  // namespace cmgen
