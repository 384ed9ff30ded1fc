#include <cctype>
#include <map>

#include "flex/io.hpp"

namespace flex {

ParseError::ParseError(int line, int col, std::string expected, const std::string& found)
    : Error(ErrorCode::SyntaxError, "line " + std::to_string(line) + ", col " + std::to_string(col) +
                                        ": expected " + expected + ", found " + found),
      line_(line),
      col_(col),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { Number, Ident, Sym, Newline, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto push = [&](Tok k, std::string t, int c) { out.push_back({k, std::move(t), line, c}); };
  while (i < src.size()) {
    const char ch = src[i];
    if (ch == '\n') {
      push(Tok::Newline, "end of line", col);
      ++line;
      col = 1;
      ++i;
    } else if (ch == '#') {
      while (i < src.size() && src[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      ++col;
    } else if (std::isdigit(static_cast<unsigned char>(ch)) || (ch == '.' && i + 1 < src.size() && std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
      const std::size_t start = i;
      while (i < src.size() && (std::isdigit(static_cast<unsigned char>(src[i])) || src[i] == '.')) ++i;
      push(Tok::Number, std::string(src.substr(start, i - start)), col);
      col += static_cast<int>(i - start);
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const std::size_t start = i;
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
      push(Tok::Ident, std::string(src.substr(start, i - start)), col);
      col += static_cast<int>(i - start);
    } else if (src.substr(i, 3) == "⊆") {
      push(Tok::Ident, "in", col);
      i += 3;
      ++col;
    } else if (std::string_view("+-*/^(),").find(ch) != std::string_view::npos) {
      push(Tok::Sym, std::string(1, ch), col);
      ++i;
      ++col;
    } else {
      throw ParseError(line, col, "a term", "'" + std::string(1, ch) + "'");
    }
  }
  push(Tok::End, "end of input", col);
  return out;
}

mpq_class parse_decimal(const std::string& text, const Token& tok) {
  const auto dot = text.find('.');
  if (dot == std::string::npos) return mpq_class(mpz_class(text));
  if (text.find('.', dot + 1) != std::string::npos) throw ParseError(tok.line, tok.col, "a number", "'" + text + "'");
  const std::string whole = text.substr(0, dot);
  const std::string frac = text.substr(dot + 1);
  mpz_class num(whole.empty() ? "0" : whole);
  mpz_class den = 1;
  for (char c : frac) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

bool is_variable(const Token& t) {
  if (t.kind != Tok::Ident || t.text.size() < 2 || t.text[0] != 'x') return false;
  for (std::size_t i = 1; i < t.text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t.text[i]))) return false;
  return true;
}

std::string describe(const Token& t) {
  if (t.kind == Tok::Newline || t.kind == Tok::End) return t.text;
  return "'" + t.text + "'";
}

struct Line {
  std::map<Eigen::Index, ExternalScalar> coeffs;
  ExternalScalar constant;
  ExternalScalar rhs;
  int line = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  std::vector<Line> system() {
    std::vector<Line> lines;
    while (true) {
      skip_newlines();
      if (peek().kind == Tok::End) break;
      lines.push_back(line());
    }
    if (lines.empty()) fail("an inclusion 'expr in ext'");
    return lines;
  }

  ExternalScalar lone_ext() {
    skip_newlines();
    ExternalScalar v = ext();
    skip_newlines();
    expect_end();
    return v;
  }

  EpsVector point() {
    skip_newlines();
    const bool paren = accept("(");
    std::vector<EpsScalar> vals;
    do vals.push_back(real(ext())); while (accept(","));
    if (paren) expect(")");
    skip_newlines();
    expect_end();
    EpsVector v(static_cast<Eigen::Index>(vals.size()));
    for (std::size_t i = 0; i < vals.size(); ++i) v(static_cast<Eigen::Index>(i)) = vals[i];
    return v;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  bool at(const char* sym) const { return peek().kind == Tok::Sym && peek().text == sym; }
  bool at_ident(const char* id) const { return peek().kind == Tok::Ident && peek().text == id; }
  bool accept(const char* sym) {
    if (!at(sym)) return false;
    ++pos_;
    return true;
  }
  void expect(const char* sym) {
    if (!accept(sym)) fail(std::string("'") + sym + "'");
  }
  void expect_end() {
    if (peek().kind != Tok::End) fail("end of input");
  }
  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(peek().line, peek().col, expected, describe(peek()));
  }
  void skip_newlines() {
    while (peek().kind == Tok::Newline) ++pos_;
  }

  EpsScalar real(const ExternalScalar& v) const {
    if (!v.is_real()) fail("a real value");
    return v.rep();
  }

  Line line() {
    Line out;
    out.line = peek().line;
    bool first = true;
    while (!at_ident("in")) {
      int sign = 1;
      if (accept("-"))
        sign = -1;
      else if (!accept("+") && !first)
        fail("'+', '-' or 'in'");
      first = false;

      ExternalScalar coef(1);
      bool has_var = false;
      if (is_variable(peek())) {
        has_var = true;
      } else {
        coef = product();
        if (is_variable(peek())) {
          has_var = true;
        } else if (at("*") && is_variable(peek(1))) {
          ++pos_;
          has_var = true;
        }
      }
      if (sign < 0) coef = -coef;
      if (!has_var) {
        out.constant += coef;
        continue;
      }
      const Token& var = next();
      const Eigen::Index idx = std::stol(var.text.substr(1));
      if (idx < 1) throw ParseError(var.line, var.col, "a variable x1, x2, ...", describe(var));
      auto [it, inserted] = out.coeffs.try_emplace(idx - 1, coef);
      if (!inserted) it->second += coef;
    }
    ++pos_;  // in
    out.rhs = ext();
    if (peek().kind != Tok::Newline && peek().kind != Tok::End) fail("end of line");
    return out;
  }

  ExternalScalar ext() {
    ExternalScalar total;
    bool first = true;
    while (true) {
      int sign = 1;
      if (accept("-"))
        sign = -1;
      else if (!accept("+") && !first)
        break;
      first = false;
      ExternalScalar term = product();
      total += sign < 0 ? -term : term;
    }
    return total;
  }

  ExternalScalar product() {
    ExternalScalar acc = factor();
    while (true) {
      if (at("*") && !is_variable(peek(1))) {
        ++pos_;
        acc = acc * factor();
      } else if (at("/")) {
        ++pos_;
        const Token& where = peek();
        const ExternalScalar d = factor();
        if (!d.is_real() || d.rep().is_zero())
          throw ParseError(where.line, where.col, "a non-zero real divisor", describe(where));
        const EpsScalar inv = d.rep().inverse();
        acc = ExternalScalar(acc.rep() * inv, ntx_scale(inv, acc.neutrix()));
      } else {
        return acc;
      }
    }
  }

  int exponent() {
    if (!accept("^")) return 1;
    int sign = 1;
    if (accept("-"))
      sign = -1;
    else
      accept("+");
    const Token& t = peek();
    if (t.kind != Tok::Number || t.text.find('.') != std::string::npos) fail("an integer exponent");
    ++pos_;
    return sign * std::stoi(t.text);
  }

  ExternalScalar factor() {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      ++pos_;
      return EpsScalar(parse_decimal(t.text, t));
    }
    if (accept("(")) {
      ExternalScalar v = ext();
      expect(")");
      return v;
    }
    if (t.kind == Tok::Ident) {
      if (t.text == "eps") {
        ++pos_;
        return EpsScalar::eps(exponent());
      }
      if (t.text == "w") {
        ++pos_;
        return EpsScalar::eps(-exponent());
      }
      if (t.text == "o" || t.text == "L" || t.text == "R") {
        ++pos_;
        return ExternalScalar(t.text == "o" ? Neutrix::oslash() : t.text == "L" ? Neutrix::pound() : Neutrix::full());
      }
    }
    fail("a number, 'eps', 'w', 'o', 'L', 'R' or '('");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

FlexibleSystem parse_system(std::string_view text) {
  Parser p(text);
  const std::vector<Line> lines = p.system();
  Eigen::Index n = 0;
  for (const auto& l : lines)
    for (const auto& [j, c] : l.coeffs) n = std::max(n, j + 1);
  if (n == 0) throw Error(ErrorCode::ValidationError, "InconsistentArity: the system has no variables");

  const auto m = static_cast<Eigen::Index>(lines.size());
  ExternalMatrix a = ExternalMatrix::Constant(m, n, ExternalScalar());
  ExternalVector b(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const Line& l = lines[static_cast<std::size_t>(i)];
    for (const auto& [j, c] : l.coeffs) a(i, j) = c;
    if (l.rhs.neutrix().is_full())
      throw Error(ErrorCode::ValidationError, "FullLineRHS: right-hand side of line " + std::to_string(l.line) + " is R");
    if (!l.constant.neutrix().subset_of(l.rhs.neutrix()))
      throw Error(ErrorCode::ValidationError, "constant term on line " + std::to_string(l.line) +
                                                  " carries a neutrix larger than the right-hand side");
    b(i) = ExternalScalar(l.rhs.rep() - l.constant.rep(), l.rhs.neutrix());
  }
  return FlexibleSystem(std::move(a), std::move(b));
}

ExternalScalar parse_external(std::string_view text) { return Parser(text).lone_ext(); }

EpsVector parse_point(std::string_view text) { return Parser(text).point(); }

}  // namespace flex
