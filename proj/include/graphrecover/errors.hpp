#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphrecover {

/// A lemma or algorithm precondition does not hold; bound() names it.
class PreconditionError : public std::runtime_error {
public:
    PreconditionError(std::string bound, const std::string &message)
        : std::runtime_error(message), bound_(std::move(bound))
    {
    }

    const std::string &bound() const { return bound_; }

private:
    std::string bound_;
};

/// Malformed input file; line() is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string source, std::size_t line, const std::string &message)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + message),
          source_(std::move(source)), line_(line)
    {
    }

    const std::string &source() const { return source_; }
    std::size_t line() const { return line_; }

private:
    std::string source_;
    std::size_t line_;
};

/// A file could not be opened, read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace graphrecover
