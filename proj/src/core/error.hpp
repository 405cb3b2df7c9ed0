#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mostar {

// Precondition violation: bad parameter or wrong graph class.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed graph6 input; byte_offset points at the offending byte of the line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t byte_offset)
        : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
          byte_offset_(byte_offset) {}

    std::size_t byte_offset() const { return byte_offset_; }

private:
    std::size_t byte_offset_;
};

}  // namespace mostar
