#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "permideal/errors.hpp"
#include "permideal/polynomial.hpp"

namespace permideal {

/// Text input error with a one-based source position.
class ParseError : public AlgebraError {
 public:
  enum class Kind { Syntax, IndexRange, Coefficient };

  ParseError(Kind kind, int line, int column, const std::string& message);

  Kind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  Kind kind_;
  int line_;
  int column_;
};

/// Parses one polynomial.
///
///   poly   := ['+'|'-'] term (('+'|'-') term)*
///   term   := coeff | [coeff '*'] factor ('*' factor)*
///   factor := var ['^' nat]
///   var    := 'x[' nat ',' nat ']' | 't'
///   coeff  := nat | nat '/' nat
///
/// Whitespace is ignored between tokens. Indices are one-based and must lie
/// inside the ring's shape. Over F_p a fraction is reduced into the field.
Polynomial parse_poly(std::string_view text, const Ring& ring);

/// Parses one polynomial per non-empty line; lines starting with '#' are
/// comments. Errors report the line within `text`.
std::vector<Polynomial> parse_poly_list(std::string_view text, const Ring& ring);

/// Same as Polynomial::to_string; parse_poly(print_poly(p)) == p.
inline std::string print_poly(const Polynomial& p,
                              const TermOrder& order = TermOrder::diag_lex()) {
  return p.to_string(order);
}

}  // namespace permideal
