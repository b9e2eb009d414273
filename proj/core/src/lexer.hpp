#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ctcsim/dsl.hpp"

namespace ctcsim::detail {

enum class TokenKind {
  Ident,
  Keyword,
  Number,  // unsigned digit run; a leading '-' is a separate Minus token
  Colon,
  Assign,
  Arrow,
  DotDot,
  Plus,
  Minus,
  Star,
  LParen,
  RParen,
  Eq,
  Ne,
  Lt,
  Gt,
  Le,
  Ge,
  End,
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  SourceLocation loc;
};

bool is_keyword(std::string_view word);
std::string describe(const Token& tok);

/// Throws ParseError(SyntaxError) on a character that starts no token.
std::vector<Token> tokenize(std::string_view source);

}  // namespace ctcsim::detail
