#include "telsum/parse.hpp"

#include <cctype>
#include <optional>

namespace telsum {

namespace {

struct Token {
  enum Kind { Integer, VarX, VarT, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Kind kind;
  std::string text;  // digits for Integer, index digits for VarT
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      advance();
    int line = line_, column = column_;
    if (pos_ >= text_.size()) return {Token::End, "", line, column};
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        digits += text_[pos_];
        advance();
      }
      return {Token::Integer, std::move(digits), line, column};
    }
    if (c == 'x') {
      advance();
      return {Token::VarX, "x", line, column};
    }
    if (c == 't') {
      advance();
      std::string digits;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        digits += text_[pos_];
        advance();
      }
      if (digits.empty()) throw ParseError("expected an index after 't'", line_, column_);
      return {Token::VarT, std::move(digits), line, column};
    }
    advance();
    switch (c) {
      case '+': return {Token::Plus, "+", line, column};
      case '-': return {Token::Minus, "-", line, column};
      case '*': return {Token::Star, "*", line, column};
      case '/': return {Token::Slash, "/", line, column};
      case '^': return {Token::Caret, "^", line, column};
      case '(': return {Token::LParen, "(", line, column};
      case ')': return {Token::RParen, ")", line, column};
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line, column);
    }
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  Parser(const std::string& text, size_t nvars) : lexer_(text), nvars_(nvars) { bump(); }

  TRat parse_full() {
    TRat v = expr();
    expect(Token::End, "end of input");
    return v;
  }

  // Product of parenthesized or atomic factors with optional ^k exponents,
  // separated by '*': the pre-factored denominator format.
  std::vector<std::pair<TPoly, int>> parse_factor_list() {
    std::vector<std::pair<TPoly, int>> out;
    while (true) {
      Token at = cur_;
      TRat base = atom();
      if (!base.is_polynomial())
        throw ParseError("denominator factor must be a polynomial", at.line, at.column);
      int mult = 1;
      if (cur_.kind == Token::Caret) {
        bump();
        if (cur_.kind != Token::Integer || cur_.text.size() > 4)
          throw ParseError("expected a small positive exponent", cur_.line, cur_.column);
        mult = static_cast<int>(std::stol(cur_.text));
        if (mult <= 0) throw ParseError("exponent must be positive", cur_.line, cur_.column);
        bump();
      }
      TPoly factor =
          base.num() * TPoly::constant(nvars_, base.den().leading().second.inverse());
      out.emplace_back(std::move(factor), mult);
      if (cur_.kind != Token::Star) break;
      bump();
    }
    expect(Token::End, "end of input");
    return out;
  }

 private:
  void bump() { cur_ = lexer_.next(); }

  void expect(Token::Kind kind, const std::string& what) {
    if (cur_.kind != kind)
      throw ParseError("expected " + what, cur_.line, cur_.column);
  }

  TRat expr() {
    bool neg = false;
    while (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
      if (cur_.kind == Token::Minus) neg = !neg;
      bump();
    }
    TRat v = term();
    if (neg) v = -v;
    while (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
      bool sub = cur_.kind == Token::Minus;
      bump();
      TRat rhs = term();
      v = sub ? v - rhs : v + rhs;
    }
    return v;
  }

  TRat term() {
    TRat v = power();
    while (cur_.kind == Token::Star || cur_.kind == Token::Slash) {
      bool div = cur_.kind == Token::Slash;
      Token op = cur_;
      bump();
      TRat rhs = power();
      if (div) {
        if (rhs.is_zero())
          throw ParseError("division by zero", op.line, op.column);
        v = v / rhs;
      } else {
        v = v * rhs;
      }
    }
    return v;
  }

  TRat power() {
    TRat v = atom();
    while (cur_.kind == Token::Caret) {
      bump();
      if (cur_.kind == Token::Minus)
        throw ParseError("negative exponents are not allowed", cur_.line, cur_.column);
      if (cur_.kind != Token::Integer)
        throw ParseError("expected a non-negative integer exponent", cur_.line, cur_.column);
      if (cur_.text.size() > 6)
        throw ParseError("exponent too large", cur_.line, cur_.column);
      long e = std::stol(cur_.text);
      bump();
      TRat base = v;
      v = TRat(TPoly::constant(nvars_, XRat(1)));
      for (long i = 0; i < e; ++i) v = v * base;
    }
    return v;
  }

  TRat atom() {
    Token t = cur_;
    switch (t.kind) {
      case Token::Integer: {
        bump();
        return TRat(TPoly::constant(nvars_, XRat(XPoly(Rational(t.text)))));
      }
      case Token::VarX:
        bump();
        return TRat(TPoly::constant(nvars_, XRat::variable()));
      case Token::VarT: {
        bump();
        if (t.text.size() > 4)
          throw ParseError("unknown variable t" + t.text, t.line, t.column);
        size_t j = static_cast<size_t>(std::stol(t.text));
        if (j >= nvars_)
          throw ParseError("unknown variable t" + t.text + " (field has " +
                               std::to_string(nvars_) + " generators)",
                           t.line, t.column);
        return TRat(TPoly::variable(nvars_, j));
      }
      case Token::LParen: {
        bump();
        TRat v = expr();
        expect(Token::RParen, "')'");
        bump();
        return v;
      }
      default:
        throw ParseError("expected a number, variable, or '('", t.line, t.column);
    }
  }

  Lexer lexer_;
  size_t nvars_;
  Token cur_{Token::End, "", 0, 0};
};

// ---- problem files ----

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// An expression that must lie in C(x): parse over the field and extract the
// constant coefficient.
XRat xrat_expression(const std::string& text, size_t nvars, int line) {
  TRat v;
  try {
    v = parse_expression(text, nvars);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line, 1);
  }
  if (v.num().t_degree() > 0 || v.den().t_degree() > 0)
    throw ParseError("expected an element of C(x), got '" + text + "'", line, 1);
  Monomial unit;
  unit.e.assign(nvars, 0);
  XRat num = v.num().coeff(unit);
  XRat den = v.den().coeff(unit);
  return num / den;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  return out;
}

long int_value(const std::string& s, int line) {
  try {
    size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + s + "'", line, 1);
  }
}

}  // namespace

TRat parse_expression(const std::string& text, size_t nvars) {
  return Parser(text, nvars).parse_full();
}

ShiftSystem FieldSpec::system() const {
  if (companion) return ShiftSystem::companion(a);
  return ShiftSystem::general(rows);
}

ProblemFile parse_problem(const std::string& text) {
  ProblemFile out;
  enum Section { None, Field, Summand, Config } section = None;
  std::optional<size_t> n;
  std::vector<std::pair<std::string, int>> companion_lines, row_lines, summand_lines,
      config_lines;

  int lineno = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string raw = text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
    pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line == "[field]")
        section = Field;
      else if (line == "[summand]")
        section = Summand;
      else if (line == "[config]")
        section = Config;
      else
        throw ParseError("unknown section '" + line + "'", lineno, 1);
      continue;
    }
    size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError("expected 'key: value'", lineno, 1);
    std::string key = trim(line.substr(0, colon));
    std::string value = trim(line.substr(colon + 1));
    switch (section) {
      case Field:
        if (key == "n") {
          n = static_cast<size_t>(int_value(value, lineno));
        } else if (key == "companion") {
          companion_lines.emplace_back(value, lineno);
        } else if (key == "row") {
          row_lines.emplace_back(value, lineno);
        } else {
          throw ParseError("unknown [field] key '" + key + "'", lineno, 1);
        }
        break;
      case Summand:
        if (key == "f" || key == "denfactors") {
          summand_lines.emplace_back(line, lineno);
        } else {
          throw ParseError("unknown [summand] key '" + key + "'", lineno, 1);
        }
        break;
      case Config:
        config_lines.emplace_back(line, lineno);
        break;
      case None:
        throw ParseError("content before any section header", lineno, 1);
    }
  }

  if (!n) throw ParseError("[field] section must set n", lineno, 1);
  out.field.n = *n;
  if (!companion_lines.empty() && !row_lines.empty())
    throw ParseError("[field] cannot mix 'companion' and 'row'", companion_lines[0].second, 1);
  if (companion_lines.size() == 1) {
    out.field.companion = true;
    auto parts = split_commas(companion_lines[0].first);
    if (parts.size() != *n)
      throw ParseError("companion needs exactly n coefficients", companion_lines[0].second, 1);
    for (const auto& p : parts)
      out.field.a.push_back(xrat_expression(p, *n, companion_lines[0].second));
    if (out.field.a[0].is_zero())
      throw ParseError("companion coefficient a0 must be nonzero", companion_lines[0].second, 1);
  } else if (row_lines.size() == *n) {
    for (const auto& [value, ln] : row_lines) {
      auto parts = split_commas(value);
      if (parts.size() != *n)
        throw ParseError("matrix row needs exactly n entries", ln, 1);
      std::vector<XRat> row;
      for (const auto& p : parts) row.push_back(xrat_expression(p, *n, ln));
      out.field.rows.push_back(std::move(row));
    }
  } else {
    throw ParseError("[field] needs either one 'companion' line or n 'row' lines", lineno, 1);
  }

  bool have_f = false;
  for (const auto& [line, ln] : summand_lines) {
    size_t colon = line.find(':');
    std::string key = trim(line.substr(0, colon));
    std::string value = trim(line.substr(colon + 1));
    if (key == "f") {
      try {
        out.summand = parse_expression(value, *n);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), ln, 1);
      }
      have_f = true;
    } else {  // denfactors
      try {
        out.denfactors = Parser(value, *n).parse_factor_list();
      } catch (const ParseError& e) {
        throw ParseError(e.what(), ln, 1);
      }
      out.has_denfactors = true;
    }
  }
  if (!have_f) throw ParseError("[summand] section must set f", lineno, 1);

  for (const auto& [line, ln] : config_lines) {
    size_t colon = line.find(':');
    std::string key = trim(line.substr(0, colon));
    std::string value = trim(line.substr(colon + 1));
    if (key == "max_t_degree") {
      out.config.max_t_degree = static_cast<int>(int_value(value, ln));
    } else if (key == "max_x_degree") {
      out.config.max_x_degree = static_cast<int>(int_value(value, ln));
    } else if (key == "special_slack") {
      out.config.special_slack = static_cast<int>(int_value(value, ln));
    } else if (key == "max_shift_scan") {
      out.config.max_shift_scan = static_cast<int>(int_value(value, ln));
    } else if (key == "discover_specials") {
      if (value == "true")
        out.config.discover_specials = true;
      else if (value == "false")
        out.config.discover_specials = false;
      else
        throw ParseError("expected true or false", ln, 1);
    } else if (key == "x_denominator") {
      XRat v = xrat_expression(value, *n, ln);
      if (!v.den().is_constant() || v.is_zero())
        throw ParseError("x_denominator must be a nonzero polynomial in x", ln, 1);
      out.config.x_denominator = v.num() * v.den().coeff(0).inverse();
    } else {
      throw ParseError("unknown [config] key '" + key + "'", ln, 1);
    }
  }

  return out;
}

}  // namespace telsum
