#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ctcsim/ast.hpp"
#include "ctcsim/error.hpp"

namespace ctcsim {

enum class DiagnosticKind {
  SyntaxError,
  UndeclaredRegister,
  DuplicateRegister,
  DuplicateLabel,
  UnknownLabel,
  DuplicateReceive,
  InvalidDomain,
  LabelTableMismatch,
};

std::string_view to_string(DiagnosticKind kind);

struct Diagnostic {
  DiagnosticKind kind = DiagnosticKind::SyntaxError;
  std::string subject;  // offending token, label or register name
  SourceLocation loc;
  std::string message;

  std::string describe() const;  // "line L:C: Kind: message"
};

/// Thrown by parse(). Carries exactly one primary diagnostic.
class ParseError : public Error {
 public:
  explicit ParseError(Diagnostic d);
  const Diagnostic& diagnostic() const noexcept { return diag_; }

 private:
  Diagnostic diag_;
};

/// Parses and validates CTC-DSL source text. Throws ParseError on the first
/// syntax error or, for a syntactically valid source, on the first
/// validation violation in source order.
Program parse(std::string_view source);

/// Violations of a program's structural invariants, in source order. An
/// empty result means the program is valid.
std::vector<Diagnostic> validate(const Program& program);

/// Canonical source text: one statement per line, labels suffixed with
/// ':' and aligned in a left column.
std::string pretty(const Program& program);

std::string format_expr(const Expr& e);
std::string format_cond(const Cond& c);
std::string format_instruction(const Instruction& instr);

}  // namespace ctcsim
