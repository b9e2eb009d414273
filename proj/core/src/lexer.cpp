#include "lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace ctcsim::detail {
namespace {

constexpr std::array<std::string_view, 16> kKeywords = {
    "program", "ttreg", "init", "domain", "auto", "receive", "send", "if",
    "goto",    "output", "halt", "input", "mod",  "and",    "or",   "not",
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

bool is_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

std::string describe(const Token& tok) {
  if (tok.kind == TokenKind::End) return "end of input";
  return "'" + tok.text + "'";
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;

  auto advance = [&](std::size_t count) {
    for (std::size_t k = 0; k < count && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto emit = [&](TokenKind kind, std::size_t len) {
    out.push_back(Token{kind, std::string(src.substr(i, len)), {line, col}});
    advance(len);
  };

  while (i < src.size()) {
    const char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (ident_start(c)) {
      std::size_t len = 1;
      while (i + len < src.size() && ident_char(src[i + len])) ++len;
      emit(is_keyword(src.substr(i, len)) ? TokenKind::Keyword : TokenKind::Ident, len);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t len = 1;
      while (i + len < src.size() && std::isdigit(static_cast<unsigned char>(src[i + len]))) ++len;
      if (i + len < src.size() && ident_start(src[i + len])) {
        throw ParseError(Diagnostic{DiagnosticKind::SyntaxError,
                                    std::string(src.substr(i, len + 1)),
                                    {line, col},
                                    "malformed number"});
      }
      emit(TokenKind::Number, len);
      continue;
    }
    const char next = i + 1 < src.size() ? src[i + 1] : '\0';
    switch (c) {
      case ':': emit(TokenKind::Colon, 1); continue;
      case '+': emit(TokenKind::Plus, 1); continue;
      case '*': emit(TokenKind::Star, 1); continue;
      case '(': emit(TokenKind::LParen, 1); continue;
      case ')': emit(TokenKind::RParen, 1); continue;
      case '-':
        emit(next == '>' ? TokenKind::Arrow : TokenKind::Minus, next == '>' ? 2 : 1);
        continue;
      case '=':
        emit(next == '=' ? TokenKind::Eq : TokenKind::Assign, next == '=' ? 2 : 1);
        continue;
      case '<':
        emit(next == '=' ? TokenKind::Le : TokenKind::Lt, next == '=' ? 2 : 1);
        continue;
      case '>':
        emit(next == '=' ? TokenKind::Ge : TokenKind::Gt, next == '=' ? 2 : 1);
        continue;
      case '!':
        if (next == '=') {
          emit(TokenKind::Ne, 2);
          continue;
        }
        break;
      case '.':
        if (next == '.') {
          emit(TokenKind::DotDot, 2);
          continue;
        }
        break;
      default:
        break;
    }
    throw ParseError(Diagnostic{DiagnosticKind::SyntaxError, std::string(1, c), {line, col},
                                "unexpected character"});
  }
  out.push_back(Token{TokenKind::End, "", {line, col}});
  return out;
}

}  // namespace ctcsim::detail
