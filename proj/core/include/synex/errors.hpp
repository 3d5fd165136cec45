#pragma once

#include <stdexcept>
#include <string>

namespace synex {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input file. line is 1-based, 0 when the location is unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& file, std::size_t line, const std::string& what)
        : Error(file + ":" + std::to_string(line) + ": " + what), file_(file), line_(line) {}
    explicit ParseError(const std::string& what) : Error(what), line_(0) {}

    const std::string& file() const noexcept { return file_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::string file_;
    std::size_t line_;
};

class ArgumentError : public Error {
public:
    using Error::Error;
};

// Cycle enumeration aborted because the per-root path budget was exhausted.
class CycleLimitError : public Error {
public:
    CycleLimitError(const std::string& root, std::size_t limit)
        : Error("cycle enumeration for root '" + root + "' exceeded the path limit of " +
                std::to_string(limit)),
          root_(root), limit_(limit) {}

    const std::string& root() const noexcept { return root_; }
    std::size_t limit() const noexcept { return limit_; }

private:
    std::string root_;
    std::size_t limit_;
};

} // namespace synex
