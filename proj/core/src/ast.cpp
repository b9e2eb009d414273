#include "ctcsim/ast.hpp"

#include <utility>

namespace ctcsim {

Expr Expr::literal(Int v) {
  Expr e;
  e.kind = Kind::Literal;
  e.value = v;
  return e;
}

Expr Expr::variable(std::string name) {
  Expr e;
  e.kind = Kind::Variable;
  e.name = std::move(name);
  return e;
}

Expr Expr::input() {
  Expr e;
  e.kind = Kind::Input;
  return e;
}

Expr Expr::binary(BinaryOp op, Expr lhs, Expr rhs) {
  Expr e;
  e.kind = Kind::Binary;
  e.op = op;
  e.operands.reserve(2);
  e.operands.push_back(std::move(lhs));
  e.operands.push_back(std::move(rhs));
  return e;
}

Cond Cond::compare(CompareOp op, Expr lhs, Expr rhs) {
  Cond c;
  c.kind = Kind::Compare;
  c.cmp = op;
  c.terms.reserve(2);
  c.terms.push_back(std::move(lhs));
  c.terms.push_back(std::move(rhs));
  return c;
}

namespace {
Cond junction(Cond::Kind kind, Cond lhs, Cond rhs) {
  Cond c;
  c.kind = kind;
  c.operands.reserve(2);
  c.operands.push_back(std::move(lhs));
  c.operands.push_back(std::move(rhs));
  return c;
}
}  // namespace

Cond Cond::conj(Cond lhs, Cond rhs) { return junction(Kind::And, std::move(lhs), std::move(rhs)); }
Cond Cond::disj(Cond lhs, Cond rhs) { return junction(Kind::Or, std::move(lhs), std::move(rhs)); }

Cond Cond::negate(Cond inner) {
  Cond c;
  c.kind = Kind::Not;
  c.operands.push_back(std::move(inner));
  return c;
}

const RegisterDecl* Program::find_register(const std::string& reg) const {
  for (const auto& r : registers) {
    if (r.name == reg) return &r;
  }
  return nullptr;
}

Program make_program(std::string name, std::vector<RegisterDecl> registers,
                     std::vector<Statement> statements) {
  Program p;
  p.name = std::move(name);
  p.registers = std::move(registers);
  p.statements = std::move(statements);
  for (std::size_t i = 0; i < p.statements.size(); ++i) {
    if (const auto& label = p.statements[i].label) p.labels.try_emplace(*label, i);
  }
  return p;
}

}  // namespace ctcsim
