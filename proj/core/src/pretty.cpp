#include <algorithm>
#include <sstream>

#include "ctcsim/dsl.hpp"

namespace ctcsim {
namespace {

int precedence(BinaryOp op) { return op == BinaryOp::Add || op == BinaryOp::Sub ? 1 : 2; }

std::string_view symbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Mod: return "mod";
  }
  return "?";
}

std::string_view symbol(CompareOp op) {
  switch (op) {
    case CompareOp::Eq: return "==";
    case CompareOp::Ne: return "!=";
    case CompareOp::Lt: return "<";
    case CompareOp::Gt: return ">";
    case CompareOp::Le: return "<=";
    case CompareOp::Ge: return ">=";
  }
  return "?";
}

// Parenthesize a child whose binding is looser than its slot requires. Both
// grammars are left-associative, so the right operand also needs parens at
// equal precedence.
void write_expr(std::ostream& os, const Expr& e, int min_prec) {
  switch (e.kind) {
    case Expr::Kind::Literal: os << e.value; return;
    case Expr::Kind::Variable: os << e.name; return;
    case Expr::Kind::Input: os << "input"; return;
    case Expr::Kind::Binary: break;
  }
  const int prec = precedence(e.op);
  const bool parens = prec < min_prec;
  if (parens) os << '(';
  write_expr(os, e.operands[0], prec);
  os << ' ' << symbol(e.op) << ' ';
  write_expr(os, e.operands[1], prec + 1);
  if (parens) os << ')';
}

int precedence(const Cond& c) {
  switch (c.kind) {
    case Cond::Kind::Or: return 1;
    case Cond::Kind::And: return 2;
    case Cond::Kind::Not: return 3;
    case Cond::Kind::Compare: return 4;
  }
  return 4;
}

void write_cond(std::ostream& os, const Cond& c, int min_prec) {
  const int prec = precedence(c);
  const bool parens = prec < min_prec;
  if (parens) os << '(';
  switch (c.kind) {
    case Cond::Kind::Compare:
      write_expr(os, c.terms[0], 0);
      os << ' ' << symbol(c.cmp) << ' ';
      write_expr(os, c.terms[1], 0);
      break;
    case Cond::Kind::Not:
      os << "not ";
      write_cond(os, c.operands[0], 3);
      break;
    case Cond::Kind::And:
    case Cond::Kind::Or:
      write_cond(os, c.operands[0], prec);
      os << (c.kind == Cond::Kind::And ? " and " : " or ");
      write_cond(os, c.operands[1], prec + 1);
      break;
  }
  if (parens) os << ')';
}

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace

std::string format_expr(const Expr& e) {
  std::ostringstream os;
  write_expr(os, e, 0);
  return os.str();
}

std::string format_cond(const Cond& c) {
  std::ostringstream os;
  write_cond(os, c, 0);
  return os.str();
}

std::string format_instruction(const Instruction& instr) {
  return std::visit(
      Overloaded{
          [](const Assign& a) { return a.var + " = " + format_expr(a.value); },
          [](const Receive& r) { return "receive " + r.reg + " -> " + r.var; },
          [](const Send& s) { return "send " + s.reg + " " + format_expr(s.value); },
          [](const IfGoto& g) { return "if " + format_cond(g.cond) + " goto " + g.target; },
          [](const Goto& g) { return "goto " + g.target; },
          [](const Output& o) { return "output " + format_expr(o.value); },
          [](const Halt&) { return std::string("halt"); },
      },
      instr);
}

std::string pretty(const Program& program) {
  std::ostringstream os;
  os << "program " << program.name << "\n";

  if (!program.registers.empty()) os << "\n";
  for (const auto& r : program.registers) {
    os << "ttreg " << r.name << " init " << r.initial << " domain ";
    if (r.domain) {
      os << r.domain->lo << ".." << r.domain->hi;
    } else {
      os << "auto";
    }
    os << "\n";
  }

  std::size_t gutter = 0;
  for (const auto& s : program.statements) {
    if (s.label) gutter = std::max(gutter, s.label->size() + 2);
  }
  if (!program.statements.empty()) os << "\n";
  for (const auto& s : program.statements) {
    std::string head = s.label ? *s.label + ":" : std::string();
    head.resize(gutter, ' ');
    os << head << format_instruction(s.instr) << "\n";
  }
  return os.str();
}

}  // namespace ctcsim
