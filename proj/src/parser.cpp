#include "lintype/parser.hpp"

#include <cctype>
#include <optional>

#include "lintype/errors.hpp"

namespace lintype {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
public:
  explicit Lexer(const std::string& src) : src_(src) {}

  Token next() {
    skip_space();
    int line = line_, col = col_;
    if (pos_ >= src_.size()) return {Tok::End, "", line, col};
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
        num += advance();
      return {Tok::Number, num, line, col};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        id += advance();
      return {Tok::Ident, id, line, col};
    }
    advance();
    switch (c) {
      case '+': return {Tok::Plus, "+", line, col};
      case '-': return {Tok::Minus, "-", line, col};
      case '*': return {Tok::Star, "*", line, col};
      case '^': return {Tok::Caret, "^", line, col};
      case '/': return {Tok::Slash, "/", line, col};
      case '(': return {Tok::LParen, "(", line, col};
      case ')': return {Tok::RParen, ")", line, col};
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
  }

private:
  char advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  void skip_space() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      advance();
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
public:
  Parser(const std::string& src, const Ring& ring) : lexer_(src), ring_(ring) {
    cur_ = lexer_.next();
  }

  Polynomial parse() {
    Polynomial p = expression();
    expect(Tok::End, "end of input");
    return p;
  }

private:
  void bump() { cur_ = lexer_.next(); }

  void expect(Tok kind, const std::string& what) {
    if (cur_.kind != kind)
      throw ParseError("expected " + what +
                           (cur_.kind == Tok::End ? " but input ended"
                                                  : " before '" + cur_.text + "'"),
                       cur_.line, cur_.col);
  }

  Polynomial expression() {
    bool negate = false;
    if (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      negate = cur_.kind == Tok::Minus;
      bump();
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      bool minus = cur_.kind == Tok::Minus;
      bump();
      Polynomial t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  bool starts_factor() const {
    return cur_.kind == Tok::Number || cur_.kind == Tok::Ident ||
           cur_.kind == Tok::LParen;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      if (cur_.kind == Tok::Star) {
        bump();
        acc = acc * factor();
      } else if (starts_factor()) {  // implicit multiplication
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (cur_.kind == Tok::Caret) {
      bump();
      expect(Tok::Number, "an exponent");
      unsigned long e = std::stoul(cur_.text);
      bump();
      return base.pow(e);
    }
    return base;
  }

  Polynomial atom() {
    switch (cur_.kind) {
      case Tok::Number: {
        std::string num = cur_.text;
        bump();
        if (cur_.kind == Tok::Slash) {
          bump();
          expect(Tok::Number, "a denominator");
          if (cur_.text == "0")
            throw ParseError("zero denominator", cur_.line, cur_.col);
          num += "/" + cur_.text;
          bump();
        }
        return Polynomial::constant(ring_, rational_from_string(num));
      }
      case Tok::Ident: {
        auto idx = ring_.index_of(cur_.text);
        if (!idx)
          throw ParseError("unknown variable '" + cur_.text + "'", cur_.line,
                           cur_.col);
        bump();
        return Polynomial::variable(ring_, *idx);
      }
      case Tok::LParen: {
        bump();
        Polynomial inner = expression();
        expect(Tok::RParen, "')'");
        bump();
        return inner;
      }
      default:
        throw ParseError(cur_.kind == Tok::End
                             ? "unexpected end of input"
                             : "unexpected '" + cur_.text + "'",
                         cur_.line, cur_.col);
    }
  }

  Lexer lexer_;
  const Ring& ring_;
  Token cur_;
};

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const Ring& ring) {
  return Parser(text, ring).parse();
}

const Polynomial& SessionFile::lookup(const std::string& name) const {
  for (const auto& [n, p] : polynomials)
    if (n == name) return p;
  throw InputError("no polynomial named '" + name + "' in input");
}

SessionFile parse_session(const std::string& text) {
  SessionFile session;
  bool have_ring = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t semi = text.find(';', pos);
    std::string stmt =
        trim(semi == std::string::npos ? text.substr(pos) : text.substr(pos, semi - pos));
    pos = semi == std::string::npos ? text.size() : semi + 1;
    if (stmt.empty() || stmt[0] == '#') continue;

    if (stmt.rfind("ring", 0) == 0 &&
        (stmt.size() == 4 || std::isspace(static_cast<unsigned char>(stmt[4])))) {
      if (have_ring) throw InputError("duplicate ring statement");
      std::vector<std::string> names;
      std::string rest = stmt.substr(4);
      std::size_t p = 0;
      while (p < rest.size()) {
        std::size_t comma = rest.find(',', p);
        std::string name =
            trim(comma == std::string::npos ? rest.substr(p) : rest.substr(p, comma - p));
        p = comma == std::string::npos ? rest.size() : comma + 1;
        if (name.empty()) throw InputError("empty variable name in ring statement");
        names.push_back(name);
      }
      if (names.empty()) throw InputError("ring statement without variables");
      session.ring = Ring(names);
      have_ring = true;
      continue;
    }

    std::size_t eq = stmt.find('=');
    if (eq == std::string::npos)
      throw InputError("statement is neither a ring declaration nor an assignment: '" +
                       stmt + "'");
    if (!have_ring) throw InputError("polynomial assignment before ring statement");
    std::string name = trim(stmt.substr(0, eq));
    if (name.empty()) throw InputError("assignment without a name");
    for (const auto& [n, p] : session.polynomials)
      if (n == name) throw InputError("polynomial '" + name + "' defined twice");
    session.polynomials.emplace_back(
        name, parse_polynomial(stmt.substr(eq + 1), session.ring));
  }
  if (!have_ring) throw InputError("input contains no ring statement");
  return session;
}

}  // namespace lintype
