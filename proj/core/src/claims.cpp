#include <algorithm>
#include <iterator>

#include "ctcsim/corpus.hpp"
#include "ctcsim/numtheory.hpp"
#include "ctcsim/solver.hpp"

namespace ctcsim {

std::string_view to_string(Divergence::Kind kind) {
  switch (kind) {
    case Divergence::Kind::PresentButUnexpected: return "present-but-unexpected";
    case Divergence::Kind::ExpectedButAbsent: return "expected-but-absent";
  }
  return "?";
}

std::vector<ReceivedAssignment> claimed_fixed_points(std::string_view program_name, Int n) {
  if (!corpus::contains(program_name)) throw UnknownCorpusProgram(std::string(program_name));
  const auto view = numtheory::factor_view(n);

  std::vector<ReceivedAssignment> out;
  auto add = [&out](Int tt, std::optional<Int> flag) {
    ReceivedAssignment a;
    a.values["tt"] = tt;
    if (flag) a.values["flag"] = *flag;
    out.push_back(std::move(a));
  };

  if (program_name == "brun1") {
    // The original algorithm admits every divisor > 1, the input included.
    for (Int d : view.divisors_gt1) add(d, std::nullopt);
  } else if (program_name == "brun2") {
    if (view.is_prime) {
      add(n, std::nullopt);
    } else {
      for (Int d : view.divisors_gt1) {
        if (d != n) add(d, std::nullopt);
      }
    }
  } else {
    if (view.is_prime) {
      add(n, 1);
    } else {
      for (Int d : view.divisors_gt1) {
        if (d != n) add(d, 0);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Divergence> compare_to_claims(const SolveReport& report) {
  const auto expected = claimed_fixed_points(report.program_name, report.n);
  std::vector<ReceivedAssignment> computed;
  computed.reserve(report.fixed_points.size());
  for (const auto& fp : report.fixed_points) computed.push_back(fp.received);
  std::sort(computed.begin(), computed.end());

  std::vector<ReceivedAssignment> extra;
  std::vector<ReceivedAssignment> missing;
  std::set_difference(computed.begin(), computed.end(), expected.begin(), expected.end(),
                      std::back_inserter(extra));
  std::set_difference(expected.begin(), expected.end(), computed.begin(), computed.end(),
                      std::back_inserter(missing));

  const std::string where = report.program_name + " at N=" + std::to_string(report.n);
  std::vector<Divergence> out;
  for (auto& a : extra) {
    std::string msg = "fixed point {" + to_string(a) + "} is self-consistent for " + where +
                      " but not in the claimed solution set";
    out.push_back({Divergence::Kind::PresentButUnexpected, std::move(a), std::move(msg)});
  }
  for (auto& a : missing) {
    std::string msg = "claimed fixed point {" + to_string(a) + "} is not self-consistent for " + where;
    out.push_back({Divergence::Kind::ExpectedButAbsent, std::move(a), std::move(msg)});
  }
  return out;
}

}  // namespace ctcsim
