#include <algorithm>
#include <limits>

#include "ctcsim/solver.hpp"

namespace ctcsim {

std::string_view to_string(DomainSource source) {
  switch (source) {
    case DomainSource::Explicit: return "explicit";
    case DomainSource::InputRange: return "input-range";
    case DomainSource::Binary: return "binary";
  }
  return "?";
}

std::uint64_t DomainResolution::candidate_count() const noexcept {
  std::uint64_t product = 1;
  for (const auto& r : registers) product *= r.values.size();
  return product;
}

DomainTooLarge::DomainTooLarge(std::uint64_t candidates, std::uint64_t budget)
    : Error("candidate domain too large: " + std::to_string(candidates) + " candidates exceed budget " +
            std::to_string(budget)),
      candidates_(candidates),
      budget_(budget) {}

UnresolvableDomain::UnresolvableDomain(const std::string& reg)
    : Error("cannot infer an auto domain for register '" + reg +
            "'; declare an explicit domain lo..hi") {}

namespace {

bool mentions_input(const Expr& e) {
  if (e.kind == Expr::Kind::Input) return true;
  return std::any_of(e.operands.begin(), e.operands.end(), mentions_input);
}

bool mentions_var(const Expr& e, const std::string& var) {
  if (e.kind == Expr::Kind::Variable) return e.name == var;
  return std::any_of(e.operands.begin(), e.operands.end(),
                     [&](const Expr& sub) { return mentions_var(sub, var); });
}

// True if some comparison in `c` has `var` and `input` among its operands.
bool compared_with_input(const Cond& c, const std::string& var) {
  if (c.kind == Cond::Kind::Compare) {
    const bool has_var = mentions_var(c.terms[0], var) || mentions_var(c.terms[1], var);
    const bool has_input = mentions_input(c.terms[0]) || mentions_input(c.terms[1]);
    return has_var && has_input;
  }
  return std::any_of(c.operands.begin(), c.operands.end(),
                     [&](const Cond& sub) { return compared_with_input(sub, var); });
}

bool received_var_compared_with_input(const Program& program, const std::string& reg) {
  for (const auto& s : program.statements) {
    const auto* r = std::get_if<Receive>(&s.instr);
    if (!r || r->reg != reg) continue;
    for (const auto& t : program.statements) {
      const auto* g = std::get_if<IfGoto>(&t.instr);
      if (g && compared_with_input(g->cond, r->var)) return true;
    }
  }
  return false;
}

bool only_sent_binary_literals(const Program& program, const std::string& reg) {
  bool any = false;
  for (const auto& s : program.statements) {
    const auto* snd = std::get_if<Send>(&s.instr);
    if (!snd || snd->reg != reg) continue;
    const Expr& v = snd->value;
    if (v.kind != Expr::Kind::Literal || (v.value != 0 && v.value != 1)) return false;
    any = true;
  }
  return any;
}

struct Plan {
  std::string reg;
  DomainSource source;
  Int initial;
  Int lo;
  Int hi;
  std::uint64_t size;  // saturates at the uint64 maximum
};

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  return __builtin_add_overflow(a, b, &r) ? kSaturated : r;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  return __builtin_mul_overflow(a, b, &r) ? kSaturated : r;
}

}  // namespace

DomainResolution resolve_domains(const Program& program, Int n, std::uint64_t budget) {
  if (n < 2) throw InvalidArgument("input N must be at least 2");

  std::vector<Plan> plans;
  for (const auto& decl : program.registers) {
    Plan p{decl.name, DomainSource::Explicit, decl.initial, 0, 0, 0};
    if (decl.domain) {
      p.lo = decl.domain->lo;
      p.hi = decl.domain->hi;
    } else if (received_var_compared_with_input(program, decl.name)) {
      p.source = DomainSource::InputRange;
      p.lo = 1;
      p.hi = n;
    } else if (only_sent_binary_literals(program, decl.name)) {
      p.source = DomainSource::Binary;
      p.lo = 0;
      p.hi = 1;
    } else {
      throw UnresolvableDomain(decl.name);
    }
    const auto span = static_cast<std::uint64_t>(p.hi) - static_cast<std::uint64_t>(p.lo);
    p.size = saturating_add(span, 1);
    if (p.initial < p.lo || p.initial > p.hi) p.size = saturating_add(p.size, 1);
    plans.push_back(p);
  }
  std::sort(plans.begin(), plans.end(),
            [](const Plan& a, const Plan& b) { return a.reg < b.reg; });

  std::uint64_t product = 1;
  for (const auto& p : plans) product = saturating_mul(product, p.size);
  if (product > budget) throw DomainTooLarge(product, budget);

  DomainResolution out;
  for (const auto& p : plans) {
    RegisterDomain d{p.reg, p.source, {}};
    d.values.reserve(static_cast<std::size_t>(p.size));
    if (p.initial < p.lo) d.values.push_back(p.initial);
    for (Int v = p.lo;; ++v) {
      d.values.push_back(v);
      if (v == p.hi) break;
    }
    if (p.initial > p.hi) d.values.push_back(p.initial);
    out.registers.push_back(std::move(d));
  }
  return out;
}

}  // namespace ctcsim
