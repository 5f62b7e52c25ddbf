#pragma once

#include "roadmap/multipoly.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace roadmap {

/// Syntax error in polynomial text, with 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, size_t line, size_t column)
        : std::runtime_error("parse error at line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}
    size_t line() const { return line_; }
    size_t column() const { return column_; }

private:
    size_t line_;
    size_t column_;
};

/// Parses one polynomial over an explicit variable list. Grammar: integer or
/// rational (n/d) coefficients, the listed variable names, + - * ^ and
/// parentheses. Names not in the list raise ParseError("... unknown variable ...").
MultiPoly<Rational> parse_poly(const std::string& text, const std::vector<std::string>& vars);

/// A polynomial system over variables x1..xk.
struct ParsedSystem {
    size_t k = 0;
    std::vector<MultiPoly<Rational>> polys;  // all over the same list x1..xk
};

/// Parses a whole input: one polynomial per line, `#` starts a comment,
/// blank lines ignored. Variables are x1..xk with k inferred from the
/// highest index that occurs.
ParsedSystem parse_system(const std::string& text);

/// The standard variable list x1..xk.
std::vector<std::string> coordinate_vars(size_t k);

}  // namespace roadmap
