#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pvi {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A mathematical precondition does not hold (pole hit, wrong shape, ...).
class MathError : public Error {
public:
    using Error::Error;
};

/// Malformed expression text. `position` is a 0-based byte offset.
class ParseError : public Error {
public:
    ParseError(const std::string &what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace pvi
