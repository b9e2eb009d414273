#include <algorithm>
#include <functional>

#include "ctcsim/interpreter.hpp"

namespace ctcsim {

bool ConsistencyResult::has_conflicting_sends() const noexcept {
  return std::any_of(registers.begin(), registers.end(),
                     [](const RegisterVerdict& v) { return v.conflicting_sends; });
}

std::string ConsistencyResult::describe() const {
  if (consistent) return "Consistent";
  std::string why;
  auto append = [&why](const std::string& part) {
    if (!why.empty()) why += "; ";
    why += part;
  };
  if (!halted) append("run did not halt");
  for (const auto& v : registers) {
    if (!v.matches) append(v.explanation);
  }
  return "Inconsistent(" + why + ")";
}

ConsistencyResult consistency_of(const RunRecord& record, const ReceivedAssignment& received,
                                 const Program& program) {
  ConsistencyResult result;
  result.halted = record.halted();
  bool all_match = true;

  for (const auto& decl : program.registers) {
    RegisterVerdict v;
    v.reg = decl.name;
    if (const auto it = received.values.find(decl.name); it != received.values.end()) {
      v.received = it->second;
    } else {
      v.matches = false;
      v.explanation = decl.name + ": no received value";
      all_match = false;
      result.registers.push_back(std::move(v));
      continue;
    }

    const auto sent = record.sends.find(decl.name);
    const std::vector<Int> empty;
    const auto& values = sent == record.sends.end() ? empty : sent->second;
    const auto rv = std::to_string(v.received);
    if (!values.empty()) {
      v.last_sent = values.back();
      v.conflicting_sends = std::adjacent_find(values.begin(), values.end(),
                                               std::not_equal_to<>{}) != values.end();
      v.matches = *v.last_sent == v.received;
      const auto sv = std::to_string(*v.last_sent);
      v.explanation = decl.name + ": sent " + sv + (v.matches ? " == " : " != ") + "received " + rv;
    } else {
      v.matches = v.received == decl.initial;
      v.explanation = decl.name + ": never sent, received " + rv +
                      (v.matches ? " == " : " != ") + "initial " + std::to_string(decl.initial);
    }
    all_match = all_match && v.matches;
    result.registers.push_back(std::move(v));
  }

  result.consistent = result.halted && all_match;
  return result;
}

}  // namespace ctcsim
