#pragma once

#include <chrono>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ctcsim/ast.hpp"
#include "ctcsim/error.hpp"
#include "ctcsim/interpreter.hpp"

namespace ctcsim {

inline constexpr std::uint64_t kDefaultDomainBudget = 100'000'000;

/// How a register's candidate set was chosen.
enum class DomainSource {
  Explicit,    // declared interval plus the initial value
  InputRange,  // auto: {initial} + [1, N]
  Binary,      // auto: {initial} + {0, 1}
};

std::string_view to_string(DomainSource source);

struct RegisterDomain {
  std::string reg;
  DomainSource source = DomainSource::Explicit;
  std::vector<Int> values;  // ascending, distinct

  friend bool operator==(const RegisterDomain&, const RegisterDomain&) = default;
};

struct DomainResolution {
  std::vector<RegisterDomain> registers;  // sorted by register name

  std::uint64_t candidate_count() const noexcept;
  friend bool operator==(const DomainResolution&, const DomainResolution&) = default;
};

class DomainTooLarge : public Error {
 public:
  DomainTooLarge(std::uint64_t candidates, std::uint64_t budget);
  std::uint64_t candidates() const noexcept { return candidates_; }  // saturates
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t candidates_;
  std::uint64_t budget_;
};

/// An `auto` register that matches neither inference rule.
class UnresolvableDomain : public Error {
 public:
  explicit UnresolvableDomain(const std::string& reg);
};

/// Candidate sets for every register.
///
/// Explicit domains are used verbatim (with the initial value added). An
/// `auto` register whose received variable appears in a comparison together
/// with `input` gets {initial} + [1, N]; one that is only ever sent the
/// literals 0 or 1 gets {initial} + {0, 1}. Anything else throws
/// UnresolvableDomain. Throws DomainTooLarge when the product of the set
/// sizes exceeds `budget`, before anything is materialized.
DomainResolution resolve_domains(const Program& program, Int n,
                                 std::uint64_t budget = kDefaultDomainBudget);

enum class Classification { NontrivialFactor, TrivialSelf, Other };

std::string_view to_string(Classification c);

/// NontrivialFactor if some output o has 1 < o < n and n mod o == 0;
/// otherwise TrivialSelf if some output equals n; otherwise Other.
Classification classify(std::span<const Int> outputs, Int n);

struct FixedPoint {
  ReceivedAssignment received;
  RunRecord record;
  Classification classification = Classification::Other;

  friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
};

struct Divergence {
  enum class Kind { PresentButUnexpected, ExpectedButAbsent };
  Kind kind = Kind::PresentButUnexpected;
  ReceivedAssignment assignment;
  std::string message;

  friend bool operator==(const Divergence&, const Divergence&) = default;
};

std::string_view to_string(Divergence::Kind kind);

struct SolveReport {
  std::string program_name;
  Int n = 0;
  Limits limits;
  std::uint64_t domain_budget = kDefaultDomainBudget;
  DomainResolution domains;
  std::vector<FixedPoint> fixed_points;  // sorted by received assignment
  std::uint64_t candidates_tried = 0;
  std::uint64_t faults = 0;  // Faulted or StepLimitExceeded runs
  std::vector<Divergence> claim_divergences;
  std::chrono::nanoseconds wall_time{0};  // not part of equality

  friend bool operator==(const SolveReport& a, const SolveReport& b) {
    return a.program_name == b.program_name && a.n == b.n &&
           a.limits.max_steps == b.limits.max_steps && a.domain_budget == b.domain_budget &&
           a.domains == b.domains && a.fixed_points == b.fixed_points &&
           a.candidates_tried == b.candidates_tried && a.faults == b.faults &&
           a.claim_divergences == b.claim_divergences;
  }
};

enum class EvaluationOrder { Forward, Backward };

struct SolveOptions {
  Limits limits;
  std::uint64_t domain_budget = kDefaultDomainBudget;
  unsigned workers = 1;  // 0 picks std::thread::hardware_concurrency()
  EvaluationOrder order = EvaluationOrder::Forward;
  bool compare_claims = false;  // fill claim_divergences (corpus programs only)
};

/// Runs every candidate assignment and keeps the self-consistent ones. The
/// report does not depend on worker count or evaluation order.
SolveReport solve(const Program& program, Int n, const SolveOptions& options = {});

/// Independent re-execution of one assignment from scratch.
ConsistencyResult verify(const Program& program, Int n, const ReceivedAssignment& received,
                         const Limits& limits = {});

/// Differences between a report's fixed-point set and the set claimed for
/// the corpus program it was computed from. Throws UnknownCorpusProgram for
/// non-corpus program names.
std::vector<Divergence> compare_to_claims(const SolveReport& report);

/// The claimed fixed-point set for a corpus program at n, sorted.
std::vector<ReceivedAssignment> claimed_fixed_points(std::string_view program_name, Int n);

}  // namespace ctcsim
