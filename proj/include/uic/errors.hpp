#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace uic {

// Thrown when an integer lies outside a codec's domain, e.g. encoding 0
// with a code for N >= 1.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Thrown for a bad bit index (flip_bit) or an out-of-range position.
class IndexError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Thrown by BitString::from_text for a character other than '0'/'1'.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t index)
        : std::invalid_argument(what), index_(index) {}

    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

enum class DecodeErrorKind {
    truncated,      // ran out of bits inside a code-word
    malformed,      // no extension of the bits is a valid code-word
    trailing_bits,  // framing: bits left over after the expected count
};

const char* to_string(DecodeErrorKind kind) noexcept;

class DecodeError : public std::runtime_error {
public:
    DecodeError(DecodeErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    DecodeErrorKind kind() const noexcept { return kind_; }

private:
    DecodeErrorKind kind_;
};

class TruncatedError : public DecodeError {
public:
    TruncatedError(std::size_t needed, std::size_t available);

    std::size_t needed() const noexcept { return needed_; }
    std::size_t available() const noexcept { return available_; }

private:
    std::size_t needed_;
    std::size_t available_;
};

}  // namespace uic
