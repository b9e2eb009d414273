#include "ctcsim/solver.hpp"

#include <algorithm>
#include <thread>

namespace ctcsim {

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::NontrivialFactor: return "NontrivialFactor";
    case Classification::TrivialSelf: return "TrivialSelf";
    case Classification::Other: return "Other";
  }
  return "?";
}

Classification classify(std::span<const Int> outputs, Int n) {
  const bool factor = std::any_of(outputs.begin(), outputs.end(),
                                  [n](Int o) { return o > 1 && o < n && n % o == 0; });
  if (factor) return Classification::NontrivialFactor;
  if (std::find(outputs.begin(), outputs.end(), n) != outputs.end()) {
    return Classification::TrivialSelf;
  }
  return Classification::Other;
}

namespace {

struct Partial {
  std::vector<FixedPoint> fixed_points;
  std::uint64_t faults = 0;
};

// Enumerates the mixed-radix index range [begin, end) in the requested
// direction. Register values are passed to the machine in declaration order.
class Enumerator {
 public:
  Enumerator(const CompiledProgram& compiled, const DomainResolution& domains, Int n,
             const Limits& limits)
      : compiled_(compiled), domains_(domains), n_(n), limits_(limits) {
    const auto& regs = compiled.program().registers;
    for (const auto& d : domains.registers) {
      const auto it = std::find_if(regs.begin(), regs.end(),
                                   [&](const RegisterDecl& r) { return r.name == d.reg; });
      decl_index_.push_back(static_cast<std::size_t>(it - regs.begin()));
    }
  }

  Partial evaluate(std::uint64_t begin, std::uint64_t end, EvaluationOrder order) const {
    Partial out;
    std::vector<Int> values(domains_.registers.size());
    for (std::uint64_t k = begin; k < end; ++k) {
      const std::uint64_t index = order == EvaluationOrder::Forward ? k : end - 1 - (k - begin);
      decode(index, values);
      RunRecord rec = compiled_.run_indexed(n_, values, limits_);
      if (!rec.halted()) {
        ++out.faults;
        continue;
      }
      ReceivedAssignment received;
      for (std::size_t r = 0; r < domains_.registers.size(); ++r) {
        const auto& name = domains_.registers[r].reg;
        received.values.emplace(name, values[decl_index_[r]]);
      }
      if (consistency_of(rec, received, compiled_.program()).consistent) {
        const auto cls = classify(rec.outputs, n_);
        out.fixed_points.push_back(FixedPoint{std::move(received), std::move(rec), cls});
      }
    }
    return out;
  }

 private:
  // Last register (by name) varies fastest.
  void decode(std::uint64_t index, std::vector<Int>& values) const {
    for (std::size_t r = domains_.registers.size(); r-- > 0;) {
      const auto& vals = domains_.registers[r].values;
      values[decl_index_[r]] = vals[index % vals.size()];
      index /= vals.size();
    }
  }

  const CompiledProgram& compiled_;
  const DomainResolution& domains_;
  Int n_;
  Limits limits_;
  std::vector<std::size_t> decl_index_;  // name-sorted position -> declaration position
};

}  // namespace

SolveReport solve(const Program& program, Int n, const SolveOptions& options) {
  const auto started = std::chrono::steady_clock::now();

  if (n < 2 || n > kMaxInput) {
    throw InvalidArgument("input N must lie in [2, 2^31], got " + std::to_string(n));
  }

  SolveReport report;
  report.program_name = program.name;
  report.n = n;
  report.limits = options.limits;
  report.domain_budget = options.domain_budget;
  report.domains = resolve_domains(program, n, options.domain_budget);
  report.candidates_tried = report.domains.candidate_count();

  const CompiledProgram compiled(program);
  const Enumerator enumerator(compiled, report.domains, n, options.limits);
  const std::uint64_t total = report.candidates_tried;

  unsigned workers = options.workers == 0 ? std::thread::hardware_concurrency() : options.workers;
  workers = static_cast<unsigned>(std::clamp<std::uint64_t>(workers, 1, std::max<std::uint64_t>(total, 1)));

  std::vector<Partial> partials(workers);
  if (workers == 1) {
    partials[0] = enumerator.evaluate(0, total, options.order);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = total * w / workers;
      const std::uint64_t end = total * (w + 1) / workers;
      pool.emplace_back([&, w, begin, end] { partials[w] = enumerator.evaluate(begin, end, options.order); });
    }
  }

  for (auto& p : partials) {
    report.faults += p.faults;
    std::move(p.fixed_points.begin(), p.fixed_points.end(), std::back_inserter(report.fixed_points));
  }
  std::sort(report.fixed_points.begin(), report.fixed_points.end(),
            [](const FixedPoint& a, const FixedPoint& b) { return a.received < b.received; });

  if (options.compare_claims) report.claim_divergences = compare_to_claims(report);
  report.wall_time = std::chrono::steady_clock::now() - started;
  return report;
}

ConsistencyResult verify(const Program& program, Int n, const ReceivedAssignment& received,
                         const Limits& limits) {
  const RunRecord rec = run(program, n, received, limits);
  return consistency_of(rec, received, program);
}

}  // namespace ctcsim
