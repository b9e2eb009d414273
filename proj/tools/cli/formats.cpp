#include "formats.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>

namespace ctcsim::cli {
namespace {

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string join_ints(const std::vector<Int>& values, std::string_view sep) {
  std::vector<std::string> parts;
  parts.reserve(values.size());
  for (Int v : values) parts.push_back(std::to_string(v));
  return join(parts, sep);
}

// Collapse an ascending value list into inclusive [lo, hi] runs.
Json ranges(const std::vector<Int>& values) {
  Json out = Json::array();
  for (std::size_t i = 0; i < values.size();) {
    std::size_t j = i;
    while (j + 1 < values.size() && values[j + 1] == values[j] + 1) ++j;
    out.push_back(Json::array({values[i], values[j]}));
    i = j + 1;
  }
  return out;
}

}  // namespace

std::string format_assignment(const ReceivedAssignment& a, const RegisterOrder& order,
                              std::string_view separator) {
  std::vector<std::string> parts;
  for (const auto& reg : order) {
    if (auto it = a.values.find(reg); it != a.values.end()) {
      parts.push_back(reg + "=" + std::to_string(it->second));
    }
  }
  for (const auto& [reg, v] : a.values) {
    if (std::find(order.begin(), order.end(), reg) == order.end()) {
      parts.push_back(reg + "=" + std::to_string(v));
    }
  }
  return join(parts, separator);
}

std::optional<std::uint64_t> loop_iterations(const RunRecord& record) {
  if (auto it = record.label_counts.find("LOOP"); it != record.label_counts.end()) {
    return it->second;
  }
  return std::nullopt;
}

Json to_json(const ReceivedAssignment& a) {
  Json out = Json::object();
  for (const auto& [reg, v] : a.values) out[reg] = v;
  return out;
}

Json to_json(const RunRecord& record) {
  Json out;
  out["outputs"] = record.outputs;
  out["sends"] = Json::object();
  for (const auto& [reg, values] : record.sends) out["sends"][reg] = values;
  out["label_counts"] = Json::object();
  for (const auto& [label, count] : record.label_counts) out["label_counts"][label] = count;
  out["steps"] = record.steps;
  out["status"] = to_string(record.status);
  if (record.fault) {
    out["fault"] = to_string(*record.fault);
    out["fault_line"] = record.fault_line;
  }
  return out;
}

Json to_json(const ConsistencyResult& result) {
  Json out;
  out["consistent"] = result.consistent;
  out["halted"] = result.halted;
  out["conflicting_sends"] = result.has_conflicting_sends();
  out["verdict"] = result.describe();
  Json regs = Json::array();
  for (const auto& v : result.registers) {
    Json r;
    r["register"] = v.reg;
    r["received"] = v.received;
    r["last_sent"] = v.last_sent ? Json(*v.last_sent) : Json(nullptr);
    r["matches"] = v.matches;
    r["conflicting_sends"] = v.conflicting_sends;
    r["explanation"] = v.explanation;
    regs.push_back(std::move(r));
  }
  out["registers"] = std::move(regs);
  return out;
}

Json to_json(const RunView& view) {
  Json out = to_json(view.record);
  out["program"] = view.program;
  out["n"] = view.n;
  out["received"] = to_json(view.received);
  out["max_steps"] = view.limits.max_steps;
  out["consistency"] = to_json(view.consistency);
  return out;
}

std::string to_table(const RunView& view, const RegisterOrder& order) {
  std::ostringstream os;
  const auto row = [&os](std::string_view key, const std::string& value) {
    os << std::left << std::setw(10) << key << ' ' << value << '\n';
  };
  row("program", view.program);
  row("n", std::to_string(view.n));
  row("received", format_assignment(view.received, order));
  std::string status(to_string(view.record.status));
  if (view.record.fault) {
    status += " (" + std::string(to_string(*view.record.fault)) + " at line " +
              std::to_string(view.record.fault_line) + ")";
  }
  row("status", status);
  row("steps", std::to_string(view.record.steps));
  row("outputs", join_ints(view.record.outputs, " "));
  std::vector<std::string> sends;
  for (const auto& reg : order) {
    if (auto it = view.record.sends.find(reg); it != view.record.sends.end()) {
      sends.push_back(reg + "=[" + join_ints(it->second, ",") + "]");
    }
  }
  row("sends", join(sends, " "));
  std::vector<std::string> labels;
  for (const auto& [label, count] : view.record.label_counts) {
    labels.push_back(label + "=" + std::to_string(count));
  }
  row("labels", join(labels, " "));
  row("verdict", view.consistency.describe());
  if (view.consistency.has_conflicting_sends()) row("warning", "ConflictingSends");
  return os.str();
}

Json to_json(const SolveReport& report, bool deterministic) {
  Json out;
  out["program"] = report.program_name;
  out["n"] = report.n;
  out["max_steps"] = report.limits.max_steps;
  out["domain_budget"] = report.domain_budget;
  out["candidates_tried"] = report.candidates_tried;
  out["faults"] = report.faults;

  Json domains = Json::object();
  for (const auto& d : report.domains.registers) {
    domains[d.reg] = Json{{"source", to_string(d.source)},
                          {"size", d.values.size()},
                          {"ranges", ranges(d.values)}};
  }
  out["domains"] = std::move(domains);

  Json fps = Json::array();
  for (const auto& fp : report.fixed_points) {
    Json j = to_json(fp.record);
    j["received"] = to_json(fp.received);
    j["classification"] = to_string(fp.classification);
    fps.push_back(std::move(j));
  }
  out["fixed_point_count"] = report.fixed_points.size();
  out["fixed_points"] = std::move(fps);

  Json divs = Json::array();
  for (const auto& d : report.claim_divergences) {
    divs.push_back(Json{{"kind", to_string(d.kind)},
                        {"received", to_json(d.assignment)},
                        {"message", d.message}});
  }
  out["claim_divergences"] = std::move(divs);

  if (!deterministic) {
    out["wall_time_ms"] =
        std::chrono::duration<double, std::milli>(report.wall_time).count();
  }
  return out;
}

std::string to_table(const SolveReport& report, const RegisterOrder& order) {
  std::ostringstream os;
  os << "program " << report.program_name << "  N=" << report.n
     << "  candidates=" << report.candidates_tried << "  faults=" << report.faults << '\n';
  for (const auto& d : report.domains.registers) {
    os << "  domain " << d.reg << ": " << to_string(d.source) << ", " << d.values.size()
       << " values " << ranges(d.values).dump() << '\n';
  }

  os << "fixed points: " << report.fixed_points.size() << '\n';
  if (!report.fixed_points.empty()) {
    std::vector<std::string> received;
    std::size_t width = 8;
    for (const auto& fp : report.fixed_points) {
      received.push_back(format_assignment(fp.received, order));
      width = std::max(width, received.back().size());
    }
    os << "  " << std::left << std::setw(static_cast<int>(width)) << "received" << "  "
       << std::setw(8) << "output" << std::setw(18) << "class" << std::setw(6) << "loop"
       << "steps\n";
    for (std::size_t i = 0; i < report.fixed_points.size(); ++i) {
      const auto& fp = report.fixed_points[i];
      const auto loops = loop_iterations(fp.record);
      os << "  " << std::setw(static_cast<int>(width)) << received[i] << "  " << std::setw(8)
         << join_ints(fp.record.outputs, " ") << std::setw(18) << to_string(fp.classification)
         << std::setw(6) << (loops ? std::to_string(*loops) : "-") << fp.record.steps << '\n';
    }
  }

  os << "divergences: " << report.claim_divergences.size() << '\n';
  for (const auto& d : report.claim_divergences) {
    os << "  " << to_string(d.kind) << ": " << d.message << '\n';
  }
  return os.str();
}

std::string to_csv(const SolveReport& report, const RegisterOrder& order) {
  std::ostringstream os;
  os << "program,n,received,outputs,classification,loop_iterations,steps\n";
  for (const auto& fp : report.fixed_points) {
    const auto loops = loop_iterations(fp.record);
    os << report.program_name << ',' << report.n << ',' << format_assignment(fp.received, order, ";")
       << ',' << join_ints(fp.record.outputs, ";") << ',' << to_string(fp.classification) << ','
       << (loops ? std::to_string(*loops) : "-") << ',' << fp.record.steps << '\n';
  }
  return os.str();
}

SweepRow make_sweep_row(const SolveReport& report) {
  SweepRow row;
  row.n = report.n;
  row.program = report.program_name;
  row.fixedpoint_count = report.fixed_points.size();
  row.divergence_count = report.claim_divergences.size();

  std::vector<std::size_t> idx(report.fixed_points.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return report.fixed_points[a].record.outputs < report.fixed_points[b].record.outputs;
  });
  for (std::size_t i : idx) {
    const auto& fp = report.fixed_points[i];
    const auto loops = loop_iterations(fp.record);
    row.outputs.push_back(join_ints(fp.record.outputs, " "));
    row.classifications.emplace_back(to_string(fp.classification));
    row.loop_iterations.push_back(loops ? std::to_string(*loops) : "-");
  }
  return row;
}

std::string to_csv_line(const SweepRow& row) {
  std::ostringstream os;
  os << row.n << ',' << row.program << ',' << row.fixedpoint_count << ','
     << join(row.outputs, ";") << ',' << join(row.classifications, ";") << ','
     << join(row.loop_iterations, ";") << ',' << row.divergence_count;
  return os.str();
}

}  // namespace ctcsim::cli
