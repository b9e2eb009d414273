#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ctcsim {

using Int = std::int64_t;

enum class BinaryOp { Add, Sub, Mul, Mod };
enum class CompareOp { Eq, Ne, Lt, Gt, Le, Ge };

// Integer expression tree. Binary nodes own exactly two operands.
struct Expr {
  enum class Kind { Literal, Variable, Input, Binary };

  Kind kind = Kind::Literal;
  Int value = 0;
  std::string name;
  BinaryOp op = BinaryOp::Add;
  std::vector<Expr> operands;

  static Expr literal(Int v);
  static Expr variable(std::string name);
  static Expr input();
  static Expr binary(BinaryOp op, Expr lhs, Expr rhs);

  friend bool operator==(const Expr&, const Expr&) = default;
};

// Boolean condition tree. Compare nodes hold two Exprs in `terms`;
// And/Or hold two sub-conditions, Not holds one.
struct Cond {
  enum class Kind { Compare, And, Or, Not };

  Kind kind = Kind::Compare;
  CompareOp cmp = CompareOp::Eq;
  std::vector<Expr> terms;
  std::vector<Cond> operands;

  static Cond compare(CompareOp op, Expr lhs, Expr rhs);
  static Cond conj(Cond lhs, Cond rhs);
  static Cond disj(Cond lhs, Cond rhs);
  static Cond negate(Cond c);

  friend bool operator==(const Cond&, const Cond&) = default;
};

struct Assign {
  std::string var;
  Expr value;
  friend bool operator==(const Assign&, const Assign&) = default;
};

struct Receive {
  std::string reg;
  std::string var;
  friend bool operator==(const Receive&, const Receive&) = default;
};

struct Send {
  std::string reg;
  Expr value;
  friend bool operator==(const Send&, const Send&) = default;
};

struct IfGoto {
  Cond cond;
  std::string target;
  friend bool operator==(const IfGoto&, const IfGoto&) = default;
};

struct Goto {
  std::string target;
  friend bool operator==(const Goto&, const Goto&) = default;
};

struct Output {
  Expr value;
  friend bool operator==(const Output&, const Output&) = default;
};

struct Halt {
  friend bool operator==(const Halt&, const Halt&) = default;
};

using Instruction = std::variant<Assign, Receive, Send, IfGoto, Goto, Output, Halt>;

struct SourceLocation {
  int line = 0;
  int column = 0;
};

// Equality is structural: source locations are ignored so that a program
// and its pretty-printed reparse compare equal.
struct Statement {
  std::optional<std::string> label;
  Instruction instr;
  SourceLocation loc;

  friend bool operator==(const Statement& a, const Statement& b) {
    return a.label == b.label && a.instr == b.instr;
  }
};

struct Interval {
  Int lo = 0;
  Int hi = 0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct RegisterDecl {
  std::string name;
  Int initial = 0;
  std::optional<Interval> domain;  // nullopt means `domain auto`
  SourceLocation loc;

  bool is_auto() const noexcept { return !domain.has_value(); }

  friend bool operator==(const RegisterDecl& a, const RegisterDecl& b) {
    return a.name == b.name && a.initial == b.initial && a.domain == b.domain;
  }
};

struct Program {
  std::string name;
  std::vector<RegisterDecl> registers;
  std::vector<Statement> statements;
  std::map<std::string, std::size_t> labels;

  const RegisterDecl* find_register(const std::string& reg) const;

  friend bool operator==(const Program&, const Program&) = default;
};

// Builds a Program and its label table (first occurrence wins) without
// validating it. Use validate() to check the result.
Program make_program(std::string name, std::vector<RegisterDecl> registers,
                     std::vector<Statement> statements);

}  // namespace ctcsim
