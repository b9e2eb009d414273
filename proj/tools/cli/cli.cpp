#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ctcsim/corpus.hpp"
#include "ctcsim/dsl.hpp"
#include "ctcsim/numtheory.hpp"
#include "ctcsim/solver.hpp"
#include "formats.hpp"

namespace ctcsim::cli {
namespace {

// Thrown after a diagnostic has been written; carries the exit code.
struct Exit {
  int code;
};

struct LoadedProgram {
  Program program;
  bool from_corpus = false;
};

RegisterOrder register_order(const Program& p) {
  RegisterOrder out;
  for (const auto& r : p.registers) out.push_back(r.name);
  return out;
}

std::string read_file(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "ctcsim: cannot open '" << path << "': file not found or unreadable\n";
    throw Exit{kUsage};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Program parse_or_exit(std::string_view source, const std::string& origin, std::ostream& err) {
  try {
    return parse(source);
  } catch (const ParseError& e) {
    const auto& d = e.diagnostic();
    err << origin << ':' << d.loc.line << ':' << d.loc.column << ": " << to_string(d.kind)
        << ": " << d.message << '\n';
    throw Exit{kInvalidProgram};
  }
}

LoadedProgram load(const std::string& ref, std::ostream& err) {
  if (corpus::contains(ref)) return {corpus::program(ref), true};
  return {parse_or_exit(read_file(ref, err), ref, err), false};
}

ReceivedAssignment parse_received(const std::string& spec, std::ostream& err) {
  ReceivedAssignment out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    bool ok = eq != std::string::npos && eq > 0 && eq + 1 < item.size();
    Int value = 0;
    if (ok) {
      const std::string text = item.substr(eq + 1);
      const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      ok = ec == std::errc{} && ptr == text.data() + text.size();
    }
    if (!ok || !out.values.emplace(item.substr(0, eq), value).second) {
      err << "ctcsim: malformed --received entry '" << item << "' (expected name=int[,name=int])\n";
      throw Exit{kUsage};
    }
  }
  if (out.values.empty()) {
    err << "ctcsim: --received is empty\n";
    throw Exit{kUsage};
  }
  return out;
}

void check_n(Int n, std::ostream& err) {
  if (n < 2 || n > kMaxInput) {
    err << "ctcsim: --n must lie in [2, 2^31], got " << n << '\n';
    throw Exit{kUsage};
  }
}

struct SolveFlags {
  std::uint64_t max_steps = Limits{}.max_steps;
  std::uint64_t domain_budget = kDefaultDomainBudget;
  bool parallel = false;
  unsigned workers = 0;
  bool deterministic = true;
  bool expect_nonempty = false;

  SolveOptions options(bool compare_claims) const {
    SolveOptions o;
    o.limits.max_steps = max_steps;
    o.domain_budget = domain_budget;
    o.workers = parallel ? workers : 1;
    o.compare_claims = compare_claims;
    return o;
  }
};

SolveReport solve_or_exit(const LoadedProgram& lp, Int n, const SolveFlags& flags,
                          std::ostream& err) {
  try {
    return solve(lp.program, n, flags.options(lp.from_corpus));
  } catch (const DomainTooLarge& e) {
    err << "ctcsim: " << e.what() << '\n';
    throw Exit{kRuntime};
  } catch (const UnresolvableDomain& e) {
    err << "ctcsim: " << e.what() << '\n';
    throw Exit{kInvalidProgram};
  }
}

void add_step_flags(CLI::App* cmd, std::uint64_t& max_steps) {
  cmd->add_option("--max-steps", max_steps, "Step limit per forward run")
      ->envname("CTCSIM_MAX_STEPS")
      ->check(CLI::PositiveNumber);
}

void add_solve_flags(CLI::App* cmd, SolveFlags& f) {
  add_step_flags(cmd, f.max_steps);
  cmd->add_option("--domain-budget", f.domain_budget, "Maximum number of candidate assignments")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--parallel", f.parallel, "Evaluate candidates on several threads");
  cmd->add_option("--workers", f.workers, "Thread count for --parallel (0 = all cores)");
  cmd->add_flag("--deterministic,!--no-deterministic", f.deterministic,
                "Omit timing fields from JSON output (default on)");
  cmd->add_flag("--expect-nonempty", f.expect_nonempty,
                "Exit 4 when a program has no fixed point");
}

int cmd_parse(const std::string& path, std::ostream& out, std::ostream& err) {
  const Program p = parse_or_exit(read_file(path, err), path, err);
  out << "OK " << p.name << '\n';
  return kOk;
}

int cmd_run(const std::string& ref, Int n, const std::string& received_spec,
            std::uint64_t max_steps, bool trace, const std::string& format, std::ostream& out,
            std::ostream& err) {
  const LoadedProgram lp = load(ref, err);
  check_n(n, err);
  RunView view;
  view.program = lp.program.name;
  view.n = n;
  view.received = parse_received(received_spec, err);
  view.limits.max_steps = max_steps;
  try {
    view.record = run(lp.program, n, view.received, view.limits, trace ? &err : nullptr);
  } catch (const InvalidArgument& e) {
    err << "ctcsim: " << e.what() << '\n';
    throw Exit{kUsage};
  }
  view.consistency = consistency_of(view.record, view.received, lp.program);

  if (format == "json") {
    out << to_json(view).dump(2) << '\n';
  } else {
    out << to_table(view, register_order(lp.program));
  }
  return view.record.halted() ? kOk : kRuntime;
}

int cmd_solve(const std::string& ref, Int n, const std::string& format, const SolveFlags& flags,
              std::ostream& out, std::ostream& err) {
  const LoadedProgram lp = load(ref, err);
  check_n(n, err);
  const SolveReport report = solve_or_exit(lp, n, flags, err);
  const auto order = register_order(lp.program);
  if (format == "json") {
    out << to_json(report, flags.deterministic).dump(2) << '\n';
  } else if (format == "csv") {
    out << to_csv(report, order);
  } else {
    out << to_table(report, order);
  }
  return flags.expect_nonempty && report.fixed_points.empty() ? kEmptyResult : kOk;
}

int cmd_sweep(const std::string& ref, Int from, Int to, const std::string& out_path,
              const SolveFlags& flags, std::ostream& out, std::ostream& err) {
  const LoadedProgram lp = load(ref, err);
  if (from < 2 || to < from || to > kMaxInput) {
    err << "ctcsim: bad sweep range [" << from << ", " << to << "]; need 2 <= from <= to\n";
    throw Exit{kUsage};
  }

  namespace fs = std::filesystem;
  const fs::path target(out_path);
  const fs::path staging = out_path.empty() ? fs::path() : fs::path(out_path + ".partial");
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(staging, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "ctcsim: cannot write '" << out_path << "'\n";
      throw Exit{kUsage};
    }
  }
  std::ostream& csv = out_path.empty() ? out : file;
  std::ostream& summary = out_path.empty() ? err : out;

  std::uint64_t total_fixed = 0;
  std::uint64_t total_divergences = 0;
  std::uint64_t empty_rows = 0;
  std::optional<std::uint64_t> max_loop_prime;
  std::optional<std::uint64_t> max_loop_composite;
  try {
    csv << kSweepHeader << '\n';
    for (Int n = from; n <= to; ++n) {
      const SolveReport report = solve_or_exit(lp, n, flags, err);
      csv << to_csv_line(make_sweep_row(report)) << '\n';
      total_fixed += report.fixed_points.size();
      total_divergences += report.claim_divergences.size();
      if (report.fixed_points.empty()) ++empty_rows;
      auto& slot = numtheory::is_prime(n) ? max_loop_prime : max_loop_composite;
      for (const auto& fp : report.fixed_points) {
        if (const auto loops = loop_iterations(fp.record)) slot = std::max(slot.value_or(0), *loops);
      }
    }
    if (file.is_open()) {
      file.close();
      if (!file) throw Exit{kUsage};
      fs::rename(staging, target);
    }
  } catch (...) {
    if (file.is_open()) file.close();
    if (!staging.empty()) {
      std::error_code ec;
      fs::remove(staging, ec);
    }
    throw;
  }

  const auto show = [](const std::optional<std::uint64_t>& v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  summary << "rows=" << (to - from + 1) << " fixed_points=" << total_fixed
          << " divergences=" << total_divergences << " empty_rows=" << empty_rows
          << " max_loop_iterations(prime)=" << show(max_loop_prime)
          << " max_loop_iterations(composite)=" << show(max_loop_composite) << '\n';
  return flags.expect_nonempty && empty_rows > 0 ? kEmptyResult : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simulator for classical programs with time-travel registers", "ctcsim"};
  app.require_subcommand(1);

  std::string path;
  auto* parse_cmd = app.add_subcommand("parse", "Parse and validate a .ctc file");
  parse_cmd->add_option("file", path, "CTC-DSL source")->required();

  std::string ref;
  Int n = 0;
  std::string received;
  std::uint64_t run_steps = Limits{}.max_steps;
  bool trace = false;
  std::string run_format = "table";
  auto* run_cmd = app.add_subcommand("run", "Execute one forward run and judge consistency");
  run_cmd->add_option("--program", ref, "Corpus id or .ctc path")->required();
  run_cmd->add_option("--n", n, "Input N")->required();
  run_cmd->add_option("--received", received, "Received values, e.g. tt=3,flag=0")->required();
  add_step_flags(run_cmd, run_steps);
  run_cmd->add_flag("--trace", trace, "Trace every executed statement to stderr");
  run_cmd->add_option("--format", run_format)->check(CLI::IsMember({"table", "json"}));

  SolveFlags solve_flags;
  std::string solve_format = "table";
  auto* solve_cmd = app.add_subcommand("solve", "Enumerate all self-consistent assignments");
  solve_cmd->add_option("--program", ref, "Corpus id or .ctc path")->required();
  solve_cmd->add_option("--n", n, "Input N")->required();
  solve_cmd->add_option("--format", solve_format)->check(CLI::IsMember({"table", "json", "csv"}));
  add_solve_flags(solve_cmd, solve_flags);

  SolveFlags sweep_flags;
  Int from = 0;
  Int to = 0;
  std::string out_path;
  auto* sweep_cmd = app.add_subcommand("sweep", "Solve for every N in a range, write CSV");
  sweep_cmd->add_option("--program", ref, "Corpus id or .ctc path")->required();
  sweep_cmd->add_option("--from", from, "First N")->required();
  sweep_cmd->add_option("--to", to, "Last N")->required();
  sweep_cmd->add_option("--out", out_path, "CSV destination (default stdout)");
  add_solve_flags(sweep_cmd, sweep_flags);

  std::string show_id;
  auto* corpus_cmd = app.add_subcommand("corpus", "Inspect the embedded programs");
  corpus_cmd->require_subcommand(1);
  auto* list_cmd = corpus_cmd->add_subcommand("list", "List corpus programs");
  auto* show_cmd = corpus_cmd->add_subcommand("show", "Print a corpus program's source");
  show_cmd->add_option("id", show_id)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (parse_cmd->parsed()) return cmd_parse(path, out, err);
    if (run_cmd->parsed()) {
      return cmd_run(ref, n, received, run_steps, trace, run_format, out, err);
    }
    if (solve_cmd->parsed()) return cmd_solve(ref, n, solve_format, solve_flags, out, err);
    if (sweep_cmd->parsed()) return cmd_sweep(ref, from, to, out_path, sweep_flags, out, err);
    if (list_cmd->parsed()) {
      for (const auto& e : corpus::list()) out << e.id << '\t' << e.title << '\n';
      return kOk;
    }
    if (show_cmd->parsed()) {
      try {
        out << corpus::get(show_id).source;
      } catch (const UnknownCorpusProgram& e) {
        err << "ctcsim: " << e.what() << '\n';
        return kUsage;
      }
      return kOk;
    }
  } catch (const Exit& e) {
    return e.code;
  } catch (const std::exception& e) {
    err << "ctcsim: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace ctcsim::cli
