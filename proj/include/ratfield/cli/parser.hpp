#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ratfield/poly/rational_function.hpp"

namespace ratfield {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line(line),
        column(column) {}
  std::size_t line, column;
};

struct SyntaxError : ParseError {
  using ParseError::ParseError;
};
struct UnknownIdentifier : ParseError {
  using ParseError::ParseError;
};
struct ZeroDenominator : ParseError {
  using ParseError::ParseError;
};

// Grammar (whitespace ignored):
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' integer)?
//   primary := integer | identifier | '(' expr ')'
// Identifiers start with a letter and continue with letters, digits or '_'.
RationalFunction parse_expression(const std::string& text, const QRing& ring, std::size_t line = 1);

struct ProblemFile {
  QRing ring;
  std::vector<RationalFunction> gens;
  std::vector<std::size_t> lines;  // source line of each generator
};

// Header `vars: a, b, c`, then one expression per nonempty line; '#' starts a comment.
ProblemFile parse_problem(const std::string& text);

// Reorders the ring variables; `order` must be a permutation of the current names.
QRing reorder_ring(const QRing& ring, const std::vector<std::string>& order);
RationalFunction move_to_ring(const RationalFunction& f, const QRing& target);

}  // namespace ratfield
