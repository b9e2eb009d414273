#include <algorithm>
#include <map>
#include <set>

#include "ctcsim/dsl.hpp"

namespace ctcsim {
namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace

std::vector<Diagnostic> validate(const Program& program) {
  std::vector<Diagnostic> out;
  auto report = [&](DiagnosticKind kind, std::string subject, SourceLocation loc,
                    std::string message) {
    out.push_back(Diagnostic{kind, std::move(subject), loc, std::move(message)});
  };

  std::set<std::string> declared;
  for (const auto& r : program.registers) {
    if (!declared.insert(r.name).second) {
      report(DiagnosticKind::DuplicateRegister, r.name, r.loc,
             "register '" + r.name + "' is declared more than once");
    }
    if (r.domain && r.domain->lo > r.domain->hi) {
      report(DiagnosticKind::InvalidDomain, r.name, r.loc,
             "domain of register '" + r.name + "' is empty (lo > hi)");
    }
  }

  std::map<std::string, std::size_t> labels;
  for (std::size_t i = 0; i < program.statements.size(); ++i) {
    const auto& s = program.statements[i];
    if (!s.label) continue;
    if (!labels.try_emplace(*s.label, i).second) {
      report(DiagnosticKind::DuplicateLabel, *s.label, s.loc,
             "label '" + *s.label + "' is defined more than once");
    }
  }
  if (labels != program.labels) {
    report(DiagnosticKind::LabelTableMismatch, program.name, SourceLocation{},
           "label table does not match the labeled statements");
  }

  std::set<std::string> received;
  auto check_register = [&](const std::string& reg, const Statement& s) {
    if (!declared.contains(reg)) {
      report(DiagnosticKind::UndeclaredRegister, reg, s.loc,
             "register '" + reg + "' is not declared");
    }
  };
  auto check_target = [&](const std::string& target, const Statement& s) {
    if (!labels.contains(target)) {
      report(DiagnosticKind::UnknownLabel, target, s.loc, "unknown label '" + target + "'");
    }
  };

  for (const auto& s : program.statements) {
    std::visit(Overloaded{
                   [&](const Receive& r) {
                     check_register(r.reg, s);
                     if (!received.insert(r.reg).second) {
                       report(DiagnosticKind::DuplicateReceive, r.reg, s.loc,
                              "register '" + r.reg + "' is received more than once");
                     }
                   },
                   [&](const Send& snd) { check_register(snd.reg, s); },
                   [&](const IfGoto& g) { check_target(g.target, s); },
                   [&](const Goto& g) { check_target(g.target, s); },
                   [](const auto&) {},
               },
               s.instr);
  }

  std::stable_sort(out.begin(), out.end(), [](const Diagnostic& a, const Diagnostic& b) {
    return a.loc.line < b.loc.line;
  });
  return out;
}

}  // namespace ctcsim
