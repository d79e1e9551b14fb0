#include "locdiag/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "locdiag/errors.hpp"

namespace locdiag {

namespace {

enum class Tok { LParen, RParen, Not, And, Or, Implies, False, True, Ident, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_blank();
    const int line = line_, col = col_;
    if (pos_ >= text_.size()) return {Tok::End, "", line, col};
    const char c = text_[pos_];
    switch (c) {
      case '(': advance(); return {Tok::LParen, "(", line, col};
      case ')': advance(); return {Tok::RParen, ")", line, col};
      case '!': advance(); return {Tok::Not, "!", line, col};
      case '&': advance(); return {Tok::And, "&", line, col};
      case '|': advance(); return {Tok::Or, "|", line, col};
      case '-':
        advance();
        if (pos_ < text_.size() && text_[pos_] == '>') {
          advance();
          return {Tok::Implies, "->", line, col};
        }
        throw ParseError("unknown token '-' (expected '->')", line, col);
      default:
        break;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string word;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        word += text_[pos_];
        advance();
      }
      if (word == "false") return {Tok::False, word, line, col};
      if (word == "true") return {Tok::True, word, line, col};
      return {Tok::Ident, word, line, col};
    }
    throw ParseError(std::string("unknown token '") + c + "'", line, col);
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { shift(); }

  Formula parse() {
    Formula f = implication();
    expect(Tok::End, "end of input");
    return f;
  }

 private:
  void shift() { current_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& expected) {
    const std::string got = current_.kind == Tok::End ? "end of input" : "'" + current_.text + "'";
    throw ParseError("expected " + expected + ", got " + got, current_.line, current_.column);
  }

  void expect(Tok kind, const std::string& what) {
    if (current_.kind != kind) fail(what);
  }

  bool accept(Tok kind) {
    if (current_.kind != kind) return false;
    shift();
    return true;
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (accept(Tok::Implies)) {
      return Formula::implication(std::move(lhs), implication());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (accept(Tok::Or)) {
      f = Formula::disjunction(std::move(f), conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (accept(Tok::And)) {
      f = Formula::conjunction(std::move(f), unary());
    }
    return f;
  }

  Formula unary() {
    switch (current_.kind) {
      case Tok::Not:
        shift();
        return Formula::negation(unary());
      case Tok::LParen: {
        shift();
        Formula f = implication();
        expect(Tok::RParen, "')'");
        shift();
        return f;
      }
      case Tok::False:
        shift();
        return Formula::falsum();
      case Tok::True:
        shift();
        return Formula::verum();
      case Tok::Ident: {
        Formula f = Formula::atom(current_.text);
        shift();
        return f;
      }
      default:
        fail("a formula");
    }
  }

  Lexer lexer_;
  Token current_{Tok::End, "", 1, 1};
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

}  // namespace locdiag
