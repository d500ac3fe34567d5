#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hgrid {

/// An argument outside an operation's domain: negative energy, weights that
/// do not sum to one, a charge larger than the available headroom.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Configuration, topology or data that does not satisfy its invariants.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A malformed row in a delimited input file.
class ParseError : public ValidationError {
public:
    ParseError(std::string const& source, std::size_t line, std::string const& what)
        : ValidationError(source + ":" + std::to_string(line) + ": " + what)
        , line_(line)
    {
    }

    /// 1-based line number, header included.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Missing or unreadable input, unwritable output.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Failure while stepping a scenario (e.g. input series exhausted).
class SimulationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hgrid
