#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "chebbv/errors.hpp"
#include "chebbv/expr.hpp"

namespace chebbv::detail {

enum class TokenKind {
  number,
  identifier,
  plus,
  minus,
  star,
  slash,
  caret,
  lparen,
  rparen,
  lbracket,
  rbracket,
  comma,
  colon,
  semicolon,
  equal,
  end,
};

struct Token {
  TokenKind kind = TokenKind::end;
  std::string text;
  double number = 0.0;
  std::size_t pos = 0;
};

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

  Token expect(TokenKind kind, const char* what) {
    if (current_.kind != kind)
      throw ParseError(std::string("expected ") + what + ", found '" + describe(current_) + "'",
                       current_.pos);
    return next();
  }

  static std::string describe(const Token& t) {
    return t.kind == TokenKind::end ? "end of input" : t.text;
  }

private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    current_ = Token{};
    current_.pos = pos_;
    if (pos_ >= text_.size()) {
      current_.kind = TokenKind::end;
      return;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && pos_ + 1 < text_.size() &&
         std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      lex_number();
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_'))
        ++pos_;
      current_.kind = TokenKind::identifier;
      current_.text = std::string(text_.substr(start, pos_ - start));
      return;
    }
    current_.text = std::string(1, c);
    ++pos_;
    switch (c) {
      case '+': current_.kind = TokenKind::plus; return;
      case '-': current_.kind = TokenKind::minus; return;
      case '*': current_.kind = TokenKind::star; return;
      case '/': current_.kind = TokenKind::slash; return;
      case '^': current_.kind = TokenKind::caret; return;
      case '(': current_.kind = TokenKind::lparen; return;
      case ')': current_.kind = TokenKind::rparen; return;
      case '[': current_.kind = TokenKind::lbracket; return;
      case ']': current_.kind = TokenKind::rbracket; return;
      case ',': current_.kind = TokenKind::comma; return;
      case ':': current_.kind = TokenKind::colon; return;
      case ';': current_.kind = TokenKind::semicolon; return;
      case '=': current_.kind = TokenKind::equal; return;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", current_.pos);
    }
  }

  void lex_number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t mark = pos_;
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      } else {
        pos_ = mark;  // 'e' was not an exponent: leave it for the next token
      }
    }
    current_.kind = TokenKind::number;
    current_.text = std::string(text_.substr(start, pos_ - start));
    try {
      current_.number = std::stod(current_.text);
    } catch (const std::exception&) {
      throw ParseError("malformed number '" + current_.text + "'", start);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_;
};

/// Expression grammar entry point, consuming tokens from an ongoing stream.
/// Implemented in expr.cpp; shared with the piecewise-function parser.
::chebbv::ExprPtr parse_expression_tokens(Lexer& lex);

}  // namespace chebbv::detail
