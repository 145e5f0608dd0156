#include "hiersl/lexer.hpp"

#include <algorithm>
#include <cctype>

namespace hiersl {

IndexSet index_intersection(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

bool index_subset(const IndexSet& sub, const IndexSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

IndexSet index_range(int n) {
  IndexSet out;
  for (int i = 1; i <= n; ++i) out.push_back(i);
  return out;
}

std::string index_set_to_string(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

}  // namespace

bool is_plain_identifier(std::string_view name) {
  if (name.empty() || !ident_start(name[0])) return false;
  static const char* kKeywords[] = {"X", "U", "F", "G", "true", "false", "E", "A",
                                    "exists", "forall"};
  for (const char* k : kKeywords)
    if (name == k) return false;
  return std::all_of(name.begin(), name.end(), ident_char);
}

std::string quote_identifier(const std::string& name) {
  if (is_plain_identifier(name)) return name;
  std::string out = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < text.size(); ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  static const char* kSymbols[] = {"<->", "<<", ">>", "[[", "]]", "->", "(",
                                   ")",   "{",  "}",  ",",  ":",  ".",  "!",
                                   "&",   "|"};
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token tok;
    tok.span = SourceSpan{line, col, static_cast<int>(i), 0};
    std::size_t start = i;
    if (ident_start(c)) {
      while (i < text.size() && ident_char(text[i])) advance(1);
      tok.kind = TokenKind::Ident;
      tok.text = std::string(text.substr(start, i - start));
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        advance(1);
      tok.kind = TokenKind::Number;
      tok.text = std::string(text.substr(start, i - start));
    } else if (c == '"') {
      advance(1);
      std::string value;
      while (i < text.size() && text[i] != '"') {
        if (text[i] == '\\' && i + 1 < text.size()) advance(1);
        value += text[i];
        advance(1);
      }
      if (i >= text.size()) throw ParseError("unterminated quoted identifier", tok.span);
      advance(1);
      tok.kind = TokenKind::Ident;
      tok.quoted = true;
      tok.text = std::move(value);
    } else {
      bool matched = false;
      for (const char* sym : kSymbols) {
        std::string_view s(sym);
        if (text.substr(i, s.size()) == s) {
          tok.kind = TokenKind::Symbol;
          tok.text = std::string(s);
          advance(s.size());
          matched = true;
          break;
        }
      }
      if (!matched)
        throw ParseError(std::string("unexpected character '") + c + "'", tok.span);
    }
    tok.span.length = static_cast<int>(i - start);
    out.push_back(std::move(tok));
  }
  Token end;
  end.kind = TokenKind::End;
  end.span = SourceSpan{line, col, static_cast<int>(i), 0};
  out.push_back(end);
  return out;
}

const Token& TokenCursor::peek(std::size_t ahead) const {
  std::size_t k = std::min(pos_ + ahead, tokens_.size() - 1);
  return tokens_[k];
}

const Token& TokenCursor::next() {
  const Token& t = tokens_[pos_];
  if (pos_ + 1 < tokens_.size()) ++pos_;
  return t;
}

bool TokenCursor::at_symbol(std::string_view s, std::size_t ahead) const {
  const Token& t = peek(ahead);
  return t.kind == TokenKind::Symbol && t.text == s;
}

bool TokenCursor::at_keyword(std::string_view k, std::size_t ahead) const {
  const Token& t = peek(ahead);
  return t.kind == TokenKind::Ident && !t.quoted && t.text == k;
}

void TokenCursor::expect_symbol(std::string_view s) {
  if (!at_symbol(s)) fail("expected '" + std::string(s) + "'");
  next();
}

std::string TokenCursor::expect_ident(std::string_view what) {
  if (peek().kind != TokenKind::Ident) fail("expected " + std::string(what));
  return next().text;
}

void TokenCursor::fail(const std::string& msg) const {
  const Token& t = peek();
  std::string found = t.kind == TokenKind::End ? "end of input" : "'" + t.text + "'";
  throw ParseError(msg + ", found " + found, t.span);
}

}  // namespace hiersl
