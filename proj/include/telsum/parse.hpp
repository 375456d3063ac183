#ifndef TELSUM_PARSE_HPP
#define TELSUM_PARSE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "telsum/system.hpp"
#include "telsum/telescope.hpp"
#include "telsum/tpoly.hpp"

namespace telsum {

/// Syntax or semantic error in an expression or problem file, with a
/// 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line(line),
        column(column) {}
  int line;
  int column;
};

/// Parses an expression over the grammar
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := power (('*'|'/') power)*
///   power  := atom ['^' nonnegative-integer]
///   atom   := integer | 'x' | 't'<index> | '(' expr ')'
/// with variables x and t0..t{nvars-1}. Whitespace-insensitive; exact
/// arithmetic in C(x)(t_0, ..., t_{n-1}).
TRat parse_expression(const std::string& text, size_t nvars);

/// Difference-field description: either a companion system over the last
/// generator or a full invertible matrix.
struct FieldSpec {
  size_t n = 0;
  bool companion = false;
  std::vector<XRat> a;                  // companion coefficients a_0..a_{n-1}
  std::vector<std::vector<XRat>> rows;  // full matrix rows otherwise

  ShiftSystem system() const;
};

/// A parsed problem file: [field] section, [summand] section with the input
/// f and an optional pre-factored denominator, and [config] overrides.
struct ProblemFile {
  FieldSpec field;
  TRat summand;
  bool has_denfactors = false;
  std::vector<std::pair<TPoly, int>> denfactors;
  TelescopeConfig config;
};

/// Parses the plain-text problem format: sections [field], [summand],
/// [config]; `key: value` lines; `#` comments; UTF-8.
ProblemFile parse_problem(const std::string& text);

}  // namespace telsum

#endif
