#include <cctype>
#include <charconv>
#include <string>
#include <system_error>

#include "gencx/expr.hpp"

namespace gencx::expr {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

std::size_t scan_number(std::string_view src, std::size_t pos) {
  std::size_t i = pos;
  std::size_t digits = 0;
  while (i < src.size() && is_digit(src[i])) ++i, ++digits;
  if (i < src.size() && src[i] == '.') {
    ++i;
    while (i < src.size() && is_digit(src[i])) ++i, ++digits;
  }
  if (digits == 0) throw ParseError("malformed number", pos);
  if (i < src.size() && (src[i] == 'e' || src[i] == 'E')) {
    std::size_t j = i + 1;
    if (j < src.size() && (src[j] == '+' || src[j] == '-')) ++j;
    // An 'e' without exponent digits is left for the next token.
    if (j < src.size() && is_digit(src[j])) {
      while (j < src.size() && is_digit(src[j])) ++j;
      i = j;
    }
  }
  return i;
}

}  // namespace

std::string_view to_string(TokenKind kind) noexcept {
  switch (kind) {
    case TokenKind::number: return "number";
    case TokenKind::identifier: return "identifier";
    case TokenKind::plus: return "'+'";
    case TokenKind::minus: return "'-'";
    case TokenKind::star: return "'*'";
    case TokenKind::slash: return "'/'";
    case TokenKind::caret: return "'^'";
    case TokenKind::lparen: return "'('";
    case TokenKind::rparen: return "')'";
    case TokenKind::comma: return "','";
  }
  return "token";
}

std::vector<Token> tokenize(std::string_view source) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < source.size()) {
    const char c = source[i];
    if (is_space(c)) {
      ++i;
      continue;
    }
    if (is_digit(c) || c == '.') {
      const std::size_t end = scan_number(source, i);
      Token tok{TokenKind::number, std::string(source.substr(i, end - i)), i};
      const auto res = std::from_chars(source.data() + i, source.data() + end, tok.value);
      if (res.ec == std::errc::result_out_of_range) throw ParseError("number out of range", i);
      if (res.ec != std::errc() || res.ptr != source.data() + end) throw ParseError("malformed number", i);
      tokens.push_back(std::move(tok));
      i = end;
      continue;
    }
    if (is_ident_start(c)) {
      std::size_t end = i + 1;
      while (end < source.size() && is_ident_char(source[end])) ++end;
      tokens.push_back({TokenKind::identifier, std::string(source.substr(i, end - i)), i});
      i = end;
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '+': kind = TokenKind::plus; break;
      case '-': kind = TokenKind::minus; break;
      case '*': kind = TokenKind::star; break;
      case '/': kind = TokenKind::slash; break;
      case '^': kind = TokenKind::caret; break;
      case '(': kind = TokenKind::lparen; break;
      case ')': kind = TokenKind::rparen; break;
      case ',': kind = TokenKind::comma; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    tokens.push_back({kind, std::string(1, c), i});
    ++i;
  }
  return tokens;
}

}  // namespace gencx::expr
