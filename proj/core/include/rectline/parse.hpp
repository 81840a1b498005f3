#pragma once

#include <stdexcept>
#include <string>

#include "rectline/topology.hpp"

namespace rectline {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

// Grammar: + - over * over ^, left associative, explicit '*' required,
// rational literals "a/b", exponents are non-negative integer literals.
// Variables x, y, z.
TriPoly parse_tripoly(const std::string& text);

// Same grammar restricted to x and y; mentioning z is a ParseError.
BiPoly parse_bipoly(const std::string& text);

// Single-variable parse (certificate payloads); the other variables are
// rejected.
UniPoly parse_unipoly(const std::string& text, char var);

// Canonical graded-lex printing; parse(to_string(p)) == p.
std::string to_string(const BiPoly& p);
std::string to_string(const TriPoly& p);
std::string to_string(const UniPoly& p, char var);

}  // namespace rectline
