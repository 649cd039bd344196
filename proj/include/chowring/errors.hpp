#pragma once

#include <stdexcept>
#include <string>

namespace chowring {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands live in different polynomial rings or presentations.
struct ContextError : Error {
    using Error::Error;
};

// Index or size argument out of the admissible range.
struct RangeError : Error {
    using Error::Error;
};

// A substitution map misses a variable of the input.
struct IncompleteMapError : Error {
    using Error::Error;
};

// Unknown or invalid generator for the presentation at hand.
struct GeneratorError : Error {
    using Error::Error;
};

// A restriction homomorphism was requested where none is defined.
struct UndefinedRestrictionError : Error {
    using Error::Error;
};

// A constructed presentation falls outside what the rewrite engine models.
struct UnsupportedError : Error {
    using Error::Error;
};

// Expression syntax error; offset is the byte position in the source text.
struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : Error(msg + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

} // namespace chowring
