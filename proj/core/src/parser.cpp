#include <charconv>
#include <functional>
#include <optional>
#include <utility>

#include "ctcsim/dsl.hpp"
#include "lexer.hpp"

namespace ctcsim {

std::string_view to_string(DiagnosticKind kind) {
  switch (kind) {
    case DiagnosticKind::SyntaxError: return "SyntaxError";
    case DiagnosticKind::UndeclaredRegister: return "UndeclaredRegister";
    case DiagnosticKind::DuplicateRegister: return "DuplicateRegister";
    case DiagnosticKind::DuplicateLabel: return "DuplicateLabel";
    case DiagnosticKind::UnknownLabel: return "UnknownLabel";
    case DiagnosticKind::DuplicateReceive: return "DuplicateReceive";
    case DiagnosticKind::InvalidDomain: return "InvalidDomain";
    case DiagnosticKind::LabelTableMismatch: return "LabelTableMismatch";
  }
  return "?";
}

std::string Diagnostic::describe() const {
  return "line " + std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": " +
         std::string(to_string(kind)) + ": " + message;
}

ParseError::ParseError(Diagnostic d) : Error(d.describe()), diag_(std::move(d)) {}

namespace {

using detail::Token;
using detail::TokenKind;

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Program program() {
    expect_keyword("program");
    std::string name = expect_ident("program name").text;

    std::vector<RegisterDecl> regs;
    while (at_keyword("ttreg")) regs.push_back(register_decl());

    std::vector<Statement> stmts;
    while (peek().kind != TokenKind::End) stmts.push_back(statement());
    return make_program(std::move(name), std::move(regs), std::move(stmts));
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& take() {
    const Token& t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool at(TokenKind k) const { return peek().kind == k; }
  bool at_keyword(std::string_view kw) const {
    return peek().kind == TokenKind::Keyword && peek().text == kw;
  }

  [[noreturn]] void fail(const Token& t, const std::string& what) const {
    throw ParseError(Diagnostic{DiagnosticKind::SyntaxError, t.text, t.loc,
                                "expected " + what + ", found " + detail::describe(t)});
  }

  const Token& expect(TokenKind k, const std::string& what) {
    if (!at(k)) fail(peek(), what);
    return take();
  }
  void expect_keyword(std::string_view kw) {
    if (!at_keyword(kw)) fail(peek(), "'" + std::string(kw) + "'");
    take();
  }
  const Token& expect_ident(const std::string& what) { return expect(TokenKind::Ident, what); }

  // INT := "-"? digits, range-checked as one literal so INT64_MIN round-trips.
  Int integer(const std::string& what) {
    const Token& first = peek();
    std::string text;
    if (at(TokenKind::Minus)) {
      take();
      text = "-";
    }
    text += expect(TokenKind::Number, what).text;
    Int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      throw ParseError(Diagnostic{DiagnosticKind::SyntaxError, text, first.loc,
                                  "integer literal out of 64-bit range"});
    }
    return value;
  }

  RegisterDecl register_decl() {
    const SourceLocation loc = peek().loc;
    expect_keyword("ttreg");
    RegisterDecl r;
    r.loc = loc;
    r.name = expect_ident("register name").text;
    expect_keyword("init");
    r.initial = integer("initial value");
    expect_keyword("domain");
    if (at_keyword("auto")) {
      take();
    } else {
      Interval iv;
      iv.lo = integer("domain lower bound or 'auto'");
      expect(TokenKind::DotDot, "'..'");
      iv.hi = integer("domain upper bound");
      r.domain = iv;
    }
    return r;
  }

  Statement statement() {
    Statement s;
    if (at(TokenKind::Ident) && peek(1).kind == TokenKind::Colon) {
      s.label = take().text;
      take();
    }
    s.loc = peek().loc;
    s.instr = instruction();
    return s;
  }

  Instruction instruction() {
    const Token& t = peek();
    if (t.kind == TokenKind::Ident) {
      std::string var = take().text;
      expect(TokenKind::Assign, "'=' after '" + var + "'");
      return Assign{std::move(var), expr()};
    }
    if (t.kind != TokenKind::Keyword) fail(t, "statement");
    if (t.text == "receive") {
      take();
      std::string reg = expect_ident("register name").text;
      expect(TokenKind::Arrow, "'->'");
      return Receive{std::move(reg), expect_ident("variable name").text};
    }
    if (t.text == "send") {
      take();
      std::string reg = expect_ident("register name").text;
      return Send{std::move(reg), expr()};
    }
    if (t.text == "if") {
      take();
      Cond c = cond();
      expect_keyword("goto");
      return IfGoto{std::move(c), expect_ident("label").text};
    }
    if (t.text == "goto") {
      take();
      return Goto{expect_ident("label").text};
    }
    if (t.text == "output") {
      take();
      return Output{expr()};
    }
    if (t.text == "halt") {
      take();
      return Halt{};
    }
    fail(t, "statement");
  }

  Expr expr() {
    Expr lhs = term();
    while (at(TokenKind::Plus) || at(TokenKind::Minus)) {
      const BinaryOp op = take().kind == TokenKind::Plus ? BinaryOp::Add : BinaryOp::Sub;
      lhs = Expr::binary(op, std::move(lhs), term());
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = atom();
    while (at(TokenKind::Star) || at_keyword("mod")) {
      const BinaryOp op = take().kind == TokenKind::Star ? BinaryOp::Mul : BinaryOp::Mod;
      lhs = Expr::binary(op, std::move(lhs), atom());
    }
    return lhs;
  }

  Expr atom() {
    if (at(TokenKind::Number) || (at(TokenKind::Minus) && peek(1).kind == TokenKind::Number)) {
      return Expr::literal(integer("integer"));
    }
    if (at(TokenKind::Ident)) return Expr::variable(take().text);
    if (at_keyword("input")) {
      take();
      return Expr::input();
    }
    if (at(TokenKind::LParen)) {
      take();
      Expr e = expr();
      expect(TokenKind::RParen, "')'");
      return e;
    }
    fail(peek(), "expression");
  }

  Cond cond() {
    Cond lhs = conjunction();
    while (at_keyword("or")) {
      take();
      lhs = Cond::disj(std::move(lhs), conjunction());
    }
    return lhs;
  }

  Cond conjunction() {
    Cond lhs = negation();
    while (at_keyword("and")) {
      take();
      lhs = Cond::conj(std::move(lhs), negation());
    }
    return lhs;
  }

  Cond negation() {
    if (at_keyword("not")) {
      take();
      return Cond::negate(negation());
    }
    if (!at(TokenKind::LParen)) return comparison();

    // '(' opens either an arithmetic operand of a comparison or a nested
    // condition. Try the comparison first and keep whichever error got
    // further if both readings fail.
    const std::size_t start = pos_;
    try {
      return comparison();
    } catch (const ParseError& as_comparison) {
      const std::size_t comparison_end = pos_;
      pos_ = start;
      try {
        take();
        Cond inner = cond();
        expect(TokenKind::RParen, "')'");
        return inner;
      } catch (const ParseError&) {
        if (comparison_end >= pos_) throw as_comparison;
        throw;
      }
    }
  }

  Cond comparison() {
    Expr lhs = expr();
    std::optional<CompareOp> op;
    switch (peek().kind) {
      case TokenKind::Eq: op = CompareOp::Eq; break;
      case TokenKind::Ne: op = CompareOp::Ne; break;
      case TokenKind::Lt: op = CompareOp::Lt; break;
      case TokenKind::Gt: op = CompareOp::Gt; break;
      case TokenKind::Le: op = CompareOp::Le; break;
      case TokenKind::Ge: op = CompareOp::Ge; break;
      default: fail(peek(), "comparison operator");
    }
    take();
    return Cond::compare(*op, std::move(lhs), expr());
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Program parse(std::string_view source) {
  Parser parser(detail::tokenize(source));
  Program program = parser.program();
  auto violations = validate(program);
  if (!violations.empty()) throw ParseError(std::move(violations.front()));
  return program;
}

}  // namespace ctcsim
