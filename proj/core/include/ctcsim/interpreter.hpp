#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ctcsim/ast.hpp"

namespace ctcsim {

/// Inputs are capped so that `p * p` stays inside 64 bits for every p <= N.
inline constexpr Int kMaxInput = Int{1} << 31;

/// Register name -> value observed at the receive point.
struct ReceivedAssignment {
  std::map<std::string, Int> values;

  friend auto operator<=>(const ReceivedAssignment&, const ReceivedAssignment&) = default;
  friend bool operator==(const ReceivedAssignment&, const ReceivedAssignment&) = default;
};

std::string to_string(const ReceivedAssignment& received);

struct Limits {
  std::uint64_t max_steps = 10'000'000;
};

enum class RunStatus { Halted, StepLimitExceeded, Faulted };
enum class FaultKind { ModByNonPositive, UnboundVariable, ArithmeticOverflow };

std::string_view to_string(RunStatus status);
std::string_view to_string(FaultKind kind);

struct RunRecord {
  std::vector<Int> outputs;
  std::map<std::string, std::vector<Int>> sends;  // every declared register
  std::map<std::string, std::uint64_t> label_counts;  // every label
  std::uint64_t steps = 0;
  RunStatus status = RunStatus::Halted;
  std::optional<FaultKind> fault;
  int fault_line = 0;

  bool halted() const noexcept { return status == RunStatus::Halted; }
  std::uint64_t label_count(const std::string& label) const;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

/// A Program lowered for repeated execution: variables resolved to slots,
/// labels to statement indices, expressions to postfix code. Immutable after
/// construction and safe to share between threads.
class CompiledProgram {
 public:
  /// Throws InvalidArgument if the program fails validate().
  explicit CompiledProgram(const Program& program);
  ~CompiledProgram();
  CompiledProgram(CompiledProgram&&) noexcept;
  CompiledProgram& operator=(CompiledProgram&&) noexcept;

  const Program& program() const noexcept;

  RunRecord run(Int n, const ReceivedAssignment& received, const Limits& limits = {},
                std::ostream* trace = nullptr) const;

  /// Hot path for enumeration: register values given in declaration order.
  RunRecord run_indexed(Int n, std::span<const Int> register_values, const Limits& limits,
                        std::ostream* trace = nullptr) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Deterministic forward execution from statement 0. Faults and step-limit
/// overruns are reported in the returned record, never thrown.
/// Throws InvalidArgument when n is outside [2, kMaxInput] or `received`
/// does not name exactly the declared registers.
RunRecord run(const Program& program, Int n, const ReceivedAssignment& received,
              const Limits& limits = {}, std::ostream* trace = nullptr);

struct RegisterVerdict {
  std::string reg;
  Int received = 0;
  std::optional<Int> last_sent;  // nullopt: never sent
  bool matches = false;
  bool conflicting_sends = false;  // two sends with different values
  std::string explanation;
};

struct ConsistencyResult {
  bool consistent = false;
  bool halted = false;
  std::vector<RegisterVerdict> registers;  // declaration order

  bool has_conflicting_sends() const noexcept;
  /// "Consistent" or "Inconsistent(tt: sent 3 != received -1; ...)".
  std::string describe() const;
};

/// Self-consistency of a finished run: it halted, and every register either
/// had its last send equal to the received value, or was never sent and was
/// received with its declared initial value.
ConsistencyResult consistency_of(const RunRecord& record, const ReceivedAssignment& received,
                                 const Program& program);

}  // namespace ctcsim
