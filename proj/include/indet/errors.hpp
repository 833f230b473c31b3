#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace indet {

/// Malformed text input. position() is the 0-based byte offset of the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// More distinct indeterminate letters than the alphabet's code space allows.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Inconsistent codes, I table or L pool.
class DecodeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace indet
