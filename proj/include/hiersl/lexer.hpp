#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hiersl/common.hpp"

namespace hiersl {

enum class TokenKind {
  Ident,    // plain or double-quoted identifier
  Number,
  Symbol,   // punctuation and operators
  End,
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  bool quoted = false;
  SourceSpan span;
};

/// Splits formula text into tokens.  Recognised symbols:
/// `<< >> [[ ]] ( ) { } , : . ! & | -> <->`.  `#` starts a line comment.
std::vector<Token> tokenize(std::string_view text);

/// True if `name` can be printed without quotes.
bool is_plain_identifier(std::string_view name);
std::string quote_identifier(const std::string& name);

/// Cursor over a token vector with the small helpers both parsers need.
class TokenCursor {
 public:
  explicit TokenCursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const;
  const Token& next();
  bool at_symbol(std::string_view s, std::size_t ahead = 0) const;
  bool at_keyword(std::string_view k, std::size_t ahead = 0) const;
  bool at_end() const { return peek().kind == TokenKind::End; }
  void expect_symbol(std::string_view s);
  std::string expect_ident(std::string_view what);
  [[noreturn]] void fail(const std::string& msg) const;

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace hiersl
