#include "ctcsim/interpreter.hpp"

#include <ostream>
#include <sstream>
#include <unordered_map>

#include "ctcsim/dsl.hpp"
#include "ctcsim/error.hpp"

namespace ctcsim {

std::string_view to_string(RunStatus status) {
  switch (status) {
    case RunStatus::Halted: return "Halted";
    case RunStatus::StepLimitExceeded: return "StepLimitExceeded";
    case RunStatus::Faulted: return "Faulted";
  }
  return "?";
}

std::string_view to_string(FaultKind kind) {
  switch (kind) {
    case FaultKind::ModByNonPositive: return "ModByNonPositive";
    case FaultKind::UnboundVariable: return "UnboundVariable";
    case FaultKind::ArithmeticOverflow: return "ArithmeticOverflow";
  }
  return "?";
}

std::string to_string(const ReceivedAssignment& received) {
  std::string out;
  for (const auto& [reg, value] : received.values) {
    if (!out.empty()) out += ',';
    out += reg + '=' + std::to_string(value);
  }
  return out;
}

std::uint64_t RunRecord::label_count(const std::string& label) const {
  const auto it = label_counts.find(label);
  return it == label_counts.end() ? 0 : it->second;
}

namespace {

struct Op {
  enum class Code { Literal, Load, Input, Add, Sub, Mul, Mod };
  Code code = Code::Literal;
  Int value = 0;  // literal value or variable slot
};

using Code = std::vector<Op>;

struct CondNode {
  Cond::Kind kind = Cond::Kind::Compare;
  CompareOp cmp = CompareOp::Eq;
  Code lhs;
  Code rhs;
  std::vector<CondNode> operands;
};

struct Lowered {
  enum class Kind { Assign, Receive, Send, IfGoto, Goto, Output, Halt };
  Kind kind = Kind::Halt;
  int slot = -1;      // Assign / Receive destination
  int reg = -1;       // Receive / Send register index
  std::size_t target = 0;
  Code expr;
  CondNode cond;
  int line = 0;
  const std::string* label = nullptr;
  std::string text;   // rendered statement, for traces
};

struct Fault {
  FaultKind kind;
};

}  // namespace

struct CompiledProgram::Impl {
  Program program;
  std::vector<std::string> slot_names;
  std::unordered_map<std::string, int> slots;
  std::vector<Lowered> code;

  int slot_of(const std::string& var) {
    const auto [it, inserted] = slots.try_emplace(var, static_cast<int>(slot_names.size()));
    if (inserted) slot_names.push_back(var);
    return it->second;
  }

  int register_index(const std::string& reg) const {
    for (std::size_t i = 0; i < program.registers.size(); ++i) {
      if (program.registers[i].name == reg) return static_cast<int>(i);
    }
    return -1;
  }

  void lower_expr(const Expr& e, Code& out) {
    switch (e.kind) {
      case Expr::Kind::Literal: out.push_back({Op::Code::Literal, e.value}); return;
      case Expr::Kind::Variable: out.push_back({Op::Code::Load, slot_of(e.name)}); return;
      case Expr::Kind::Input: out.push_back({Op::Code::Input, 0}); return;
      case Expr::Kind::Binary: break;
    }
    lower_expr(e.operands[0], out);
    lower_expr(e.operands[1], out);
    switch (e.op) {
      case BinaryOp::Add: out.push_back({Op::Code::Add, 0}); break;
      case BinaryOp::Sub: out.push_back({Op::Code::Sub, 0}); break;
      case BinaryOp::Mul: out.push_back({Op::Code::Mul, 0}); break;
      case BinaryOp::Mod: out.push_back({Op::Code::Mod, 0}); break;
    }
  }

  CondNode lower_cond(const Cond& c) {
    CondNode node;
    node.kind = c.kind;
    node.cmp = c.cmp;
    if (c.kind == Cond::Kind::Compare) {
      lower_expr(c.terms[0], node.lhs);
      lower_expr(c.terms[1], node.rhs);
    }
    for (const auto& sub : c.operands) node.operands.push_back(lower_cond(sub));
    return node;
  }
};

namespace {

// Mutable state of one forward run. Never shared between runs.
class Machine {
 public:
  Machine(std::size_t slots, Int n) : vars_(slots), n_(n) { stack_.reserve(16); }

  std::optional<Fault> fault;

  Int eval(const Code& code) {
    stack_.clear();
    for (const Op& op : code) {
      if (fault) return 0;
      switch (op.code) {
        case Op::Code::Literal: stack_.push_back(op.value); break;
        case Op::Code::Input: stack_.push_back(n_); break;
        case Op::Code::Load: {
          const auto& v = vars_[static_cast<std::size_t>(op.value)];
          if (!v) {
            fault = Fault{FaultKind::UnboundVariable};
            return 0;
          }
          stack_.push_back(*v);
          break;
        }
        default: {
          const Int b = stack_.back();
          stack_.pop_back();
          Int& a = stack_.back();
          a = apply(op.code, a, b);
        }
      }
    }
    return fault ? 0 : stack_.back();
  }

  bool test(const CondNode& c) {
    switch (c.kind) {
      case Cond::Kind::Compare: {
        const Int a = eval(c.lhs);
        if (fault) return false;
        const Int b = eval(c.rhs);
        if (fault) return false;
        return compare(c.cmp, a, b);
      }
      case Cond::Kind::And: return test(c.operands[0]) && !fault && test(c.operands[1]);
      case Cond::Kind::Or: return (test(c.operands[0]) || (!fault && test(c.operands[1])));
      case Cond::Kind::Not: return !test(c.operands[0]);
    }
    return false;
  }

  void set(int slot, Int value) { vars_[static_cast<std::size_t>(slot)] = value; }

  void snapshot(std::ostream& os, const std::vector<std::string>& names) const {
    bool first = true;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (!vars_[i]) continue;
      os << (first ? "" : " ") << names[i] << '=' << *vars_[i];
      first = false;
    }
  }

 private:
  Int apply(Op::Code code, Int a, Int b) {
    Int r = 0;
    bool overflow = false;
    switch (code) {
      case Op::Code::Add: overflow = __builtin_add_overflow(a, b, &r); break;
      case Op::Code::Sub: overflow = __builtin_sub_overflow(a, b, &r); break;
      case Op::Code::Mul: overflow = __builtin_mul_overflow(a, b, &r); break;
      case Op::Code::Mod:
        if (b <= 0) {
          fault = Fault{FaultKind::ModByNonPositive};
          return 0;
        }
        r = a % b;
        if (r < 0) r += b;  // floored: result in [0, b)
        break;
      default: break;
    }
    if (overflow) fault = Fault{FaultKind::ArithmeticOverflow};
    return r;
  }

  static bool compare(CompareOp op, Int a, Int b) {
    switch (op) {
      case CompareOp::Eq: return a == b;
      case CompareOp::Ne: return a != b;
      case CompareOp::Lt: return a < b;
      case CompareOp::Gt: return a > b;
      case CompareOp::Le: return a <= b;
      case CompareOp::Ge: return a >= b;
    }
    return false;
  }

  std::vector<std::optional<Int>> vars_;
  std::vector<Int> stack_;
  Int n_;
};

void check_input(Int n) {
  if (n < 2 || n > kMaxInput) {
    throw InvalidArgument("input N must lie in [2, 2^31], got " + std::to_string(n));
  }
}

}  // namespace

CompiledProgram::CompiledProgram(const Program& program) : impl_(std::make_unique<Impl>()) {
  if (auto violations = validate(program); !violations.empty()) {
    throw InvalidArgument("invalid program: " + violations.front().describe());
  }
  Impl& m = *impl_;
  m.program = program;
  m.code.reserve(program.statements.size());
  for (const auto& s : m.program.statements) {
    Lowered l;
    l.line = s.loc.line;
    if (s.label) l.label = &*s.label;
    l.text = format_instruction(s.instr);
    if (const auto* a = std::get_if<Assign>(&s.instr)) {
      l.kind = Lowered::Kind::Assign;
      l.slot = m.slot_of(a->var);
      m.lower_expr(a->value, l.expr);
    } else if (const auto* r = std::get_if<Receive>(&s.instr)) {
      l.kind = Lowered::Kind::Receive;
      l.reg = m.register_index(r->reg);
      l.slot = m.slot_of(r->var);
    } else if (const auto* snd = std::get_if<Send>(&s.instr)) {
      l.kind = Lowered::Kind::Send;
      l.reg = m.register_index(snd->reg);
      m.lower_expr(snd->value, l.expr);
    } else if (const auto* g = std::get_if<IfGoto>(&s.instr)) {
      l.kind = Lowered::Kind::IfGoto;
      l.cond = m.lower_cond(g->cond);
      l.target = m.program.labels.at(g->target);
    } else if (const auto* j = std::get_if<Goto>(&s.instr)) {
      l.kind = Lowered::Kind::Goto;
      l.target = m.program.labels.at(j->target);
    } else if (const auto* o = std::get_if<Output>(&s.instr)) {
      l.kind = Lowered::Kind::Output;
      m.lower_expr(o->value, l.expr);
    } else {
      l.kind = Lowered::Kind::Halt;
    }
    m.code.push_back(std::move(l));
  }
}

CompiledProgram::~CompiledProgram() = default;
CompiledProgram::CompiledProgram(CompiledProgram&&) noexcept = default;
CompiledProgram& CompiledProgram::operator=(CompiledProgram&&) noexcept = default;

const Program& CompiledProgram::program() const noexcept { return impl_->program; }

RunRecord CompiledProgram::run(Int n, const ReceivedAssignment& received, const Limits& limits,
                               std::ostream* trace) const {
  const auto& regs = impl_->program.registers;
  if (received.values.size() != regs.size()) {
    throw InvalidArgument("received assignment must name exactly the declared registers, got {" +
                          to_string(received) + "}");
  }
  std::vector<Int> values;
  values.reserve(regs.size());
  for (const auto& r : regs) {
    const auto it = received.values.find(r.name);
    if (it == received.values.end()) {
      throw InvalidArgument("received assignment is missing register '" + r.name + "'");
    }
    values.push_back(it->second);
  }
  return run_indexed(n, values, limits, trace);
}

RunRecord CompiledProgram::run_indexed(Int n, std::span<const Int> register_values,
                                       const Limits& limits, std::ostream* trace) const {
  check_input(n);
  if (limits.max_steps < 1) throw InvalidArgument("max_steps must be at least 1");
  const Impl& m = *impl_;
  if (register_values.size() != m.program.registers.size()) {
    throw InvalidArgument("register value count does not match the declared registers");
  }

  RunRecord rec;
  std::vector<std::vector<Int>*> sends;
  for (const auto& r : m.program.registers) sends.push_back(&rec.sends[r.name]);
  std::vector<std::uint64_t*> counts(m.code.size(), nullptr);
  for (const auto& [label, index] : m.program.labels) counts[index] = &rec.label_counts[label];

  Machine vm(m.slot_names.size(), n);
  std::size_t pc = 0;
  while (pc < m.code.size()) {
    if (rec.steps >= limits.max_steps) {
      rec.status = RunStatus::StepLimitExceeded;
      return rec;
    }
    const Lowered& ins = m.code[pc];
    ++rec.steps;
    if (counts[pc]) ++*counts[pc];
    std::size_t next = pc + 1;

    switch (ins.kind) {
      case Lowered::Kind::Assign: {
        const Int v = vm.eval(ins.expr);
        if (!vm.fault) vm.set(ins.slot, v);
        break;
      }
      case Lowered::Kind::Receive:
        vm.set(ins.slot, register_values[static_cast<std::size_t>(ins.reg)]);
        break;
      case Lowered::Kind::Send: {
        const Int v = vm.eval(ins.expr);
        if (!vm.fault) sends[static_cast<std::size_t>(ins.reg)]->push_back(v);
        break;
      }
      case Lowered::Kind::IfGoto:
        if (vm.test(ins.cond) && !vm.fault) next = ins.target;
        break;
      case Lowered::Kind::Goto: next = ins.target; break;
      case Lowered::Kind::Output: {
        const Int v = vm.eval(ins.expr);
        if (!vm.fault) rec.outputs.push_back(v);
        break;
      }
      case Lowered::Kind::Halt: next = m.code.size(); break;
    }

    if (trace) {
      *trace << rec.steps << ", " << ins.line << ", " << (ins.label ? *ins.label : "-") << ", "
             << ins.text << ", ";
      vm.snapshot(*trace, m.slot_names);
      *trace << '\n';
    }
    if (vm.fault) {
      rec.status = RunStatus::Faulted;
      rec.fault = vm.fault->kind;
      rec.fault_line = ins.line;
      return rec;
    }
    pc = next;
  }
  rec.status = RunStatus::Halted;
  return rec;
}

RunRecord run(const Program& program, Int n, const ReceivedAssignment& received,
              const Limits& limits, std::ostream* trace) {
  return CompiledProgram(program).run(n, received, limits, trace);
}

}  // namespace ctcsim
