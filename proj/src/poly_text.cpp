#include "permideal/poly_text.hpp"

#include <cctype>

namespace permideal {

ParseError::ParseError(Kind kind, int line, int column, const std::string& message)
    : AlgebraError(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring, int first_line)
      : text_(text), ring_(ring), line_(first_line) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = get() == '-';
      skip_ws();
    }
    terms.push_back(parse_term(negative));
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+', '-' or end of input");
      get();
      skip_ws();
      terms.push_back(parse_term(c == '-'));
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  Term parse_term(bool negative) {
    Scalar coeff = ring_.field.from_int(1);
    Monomial mono(ring_.shape);
    bool have_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_coeff();
      skip_ws();
      if (peek() != '*') return finish(mono, coeff, negative);
      get();
      skip_ws();
    }
    for (;;) {
      mono = mono * parse_factor();
      have_factor = true;
      skip_ws();
      if (peek() != '*') break;
      get();
      skip_ws();
    }
    if (!have_factor) fail("expected a variable");
    return finish(mono, coeff, negative);
  }

  Term finish(const Monomial& mono, Scalar coeff, bool negative) {
    if (negative) coeff = ring_.field.neg(coeff);
    return {mono, std::move(coeff)};
  }

  Scalar parse_coeff() {
    const int line = line_;
    const int col = col_;
    mpz_class num(parse_nat_text());
    mpz_class den(1);
    skip_ws();
    if (peek() == '/') {
      get();
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) {
        fail("'/' must be followed by an integer denominator");
      }
      den = mpz_class(parse_nat_text());
    }
    try {
      return ring_.field.from_fraction(num, den);
    } catch (const AlgebraError& e) {
      throw ParseError(ParseError::Kind::Coefficient, line, col, e.what());
    }
  }

  Monomial parse_factor() {
    const int line = line_;
    const int col = col_;
    VarRef var;
    if (peek() == 't') {
      get();
      var = VarRef::elim();
    } else if (peek() == 'x') {
      get();
      skip_ws();
      expect('[');
      skip_ws();
      const long row = parse_small_nat();
      skip_ws();
      expect(',');
      skip_ws();
      const long col_idx = parse_small_nat();
      skip_ws();
      expect(']');
      if (row < 1 || row > ring_.shape.m || col_idx < 1 || col_idx > ring_.shape.n) {
        throw ParseError(ParseError::Kind::IndexRange, line, col,
                         "index x[" + std::to_string(row) + "," + std::to_string(col_idx) +
                             "] outside " + ring_.shape.to_string() + " matrix");
      }
      var = VarRef::matrix(static_cast<int>(row), static_cast<int>(col_idx));
    } else if (peek() == '/') {
      fail("division is only allowed inside a coefficient");
    } else {
      fail("expected a variable x[i,j] or t");
    }
    unsigned exponent = 1;
    skip_ws();
    if (peek() == '^') {
      get();
      skip_ws();
      const long e = parse_small_nat();
      if (e < 1 || e > static_cast<long>(Monomial::kMaxExponent)) fail("exponent out of range");
      exponent = static_cast<unsigned>(e);
    }
    skip_ws();
    if (peek() == '/') fail("division is only allowed inside a coefficient");
    return Monomial::variable(ring_.shape, var, exponent);
  }

  std::string parse_nat_text() {
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(get());
    if (digits.empty()) fail("expected an integer");
    return digits;
  }

  long parse_small_nat() {
    const std::string digits = parse_nat_text();
    if (digits.size() > 6) fail("integer too large");
    return std::stol(digits);
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    get();
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) get();
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  [[noreturn]] void fail(const std::string& message) const {
    std::string found = at_end() ? "end of input" : std::string("'") + peek() + "'";
    throw ParseError(ParseError::Kind::Syntax, line_, col_, message + ", found " + found);
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
  int line_;
  int col_ = 1;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const Ring& ring) {
  return Parser(text, ring, 1).parse();
}

std::vector<Polynomial> parse_poly_list(std::string_view text, const Ring& ring) {
  std::vector<Polynomial> out;
  int line = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line;
    std::string_view row = text.substr(start, end - start);
    std::size_t first = row.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && row[first] != '#') {
      out.push_back(Parser(row, ring, line).parse());
    }
    start = end + 1;
  }
  return out;
}

}  // namespace permideal
