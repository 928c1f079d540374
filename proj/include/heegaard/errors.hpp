#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace heegaard {

// Input text that could not be tokenized or parsed. Carries the byte offset
// of the offending token in the original text.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message)
        : std::runtime_error(message + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Well-formed input that violates a semantic requirement (bad cycle data,
// sign list of the wrong length, unusable presentation, ...).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace heegaard
