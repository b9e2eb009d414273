#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ctcsim/interpreter.hpp"
#include "ctcsim/solver.hpp"

namespace ctcsim::cli {

using Json = nlohmann::json;

// Register names in declaration order, used for human-facing ordering.
using RegisterOrder = std::vector<std::string>;

std::string format_assignment(const ReceivedAssignment& a, const RegisterOrder& order,
                              std::string_view separator = ",");

Json to_json(const ReceivedAssignment& a);
Json to_json(const RunRecord& record);
Json to_json(const ConsistencyResult& result);

struct RunView {
  std::string program;
  Int n = 0;
  ReceivedAssignment received;
  Limits limits;
  RunRecord record;
  ConsistencyResult consistency;
};

Json to_json(const RunView& view);
std::string to_table(const RunView& view, const RegisterOrder& order);

/// Canonical report JSON (keys sorted). Wall time is included only when
/// `deterministic` is false.
Json to_json(const SolveReport& report, bool deterministic);
std::string to_table(const SolveReport& report, const RegisterOrder& order);
std::string to_csv(const SolveReport& report, const RegisterOrder& order);

/// Loop iterations of a run: the execution count of the statement labeled
/// LOOP, or nullopt when the program has no such label.
std::optional<std::uint64_t> loop_iterations(const RunRecord& record);

struct SweepRow {
  Int n = 0;
  std::string program;
  std::size_t fixedpoint_count = 0;
  std::vector<std::string> outputs;          // per fixed point, sorted
  std::vector<std::string> classifications;  // aligned with outputs
  std::vector<std::string> loop_iterations;  // aligned with outputs
  std::size_t divergence_count = 0;
};

SweepRow make_sweep_row(const SolveReport& report);

inline constexpr std::string_view kSweepHeader =
    "n,program,fixedpoint_count,outputs,classifications,loop_iterations,divergences";

std::string to_csv_line(const SweepRow& row);

}  // namespace ctcsim::cli
