#pragma once

// Ring-element expressions over the generators of a presentation.
//
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' uint)?
//   atom   := 'c' uint | 'y' | uint | '(' expr ')'
//
// Whitespace is ignored. A single leading '-' is accepted inside expr so
// that printed normal forms with a negative leading term re-parse.

#include <memory>
#include <string>
#include <vector>

#include "chowring/presentation.hpp"

namespace chowring {

struct Expr {
    enum class Kind { Integer, Gen, Neg, Add, Sub, Mul, Pow };

    Kind kind;
    Int value;           // Integer
    std::string gen;     // Gen: generator display name ("c3", "y")
    int exponent = 0;    // Pow
    std::vector<Expr> children;
};

// Parses and validates generator names against the presentation.
// Throws ParseError (with byte offset) or GeneratorError.
Expr parse_expression(const std::string& src, const Presentation& pres);

// Evaluates to a formal polynomial in the presentation's generator ring.
Polynomial evaluate(const Expr& expr, const Presentation& pres);

} // namespace chowring
