#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "ctcsim/corpus.hpp"
#include "ctcsim/dsl.hpp"
#include "ctcsim/numtheory.hpp"
#include "ctcsim/solver.hpp"

namespace ctcsim {
namespace {

ReceivedAssignment tt(Int v) { return {{{"tt", v}}}; }
ReceivedAssignment tt_flag(Int t, Int f) { return {{{"tt", t}, {"flag", f}}}; }

std::vector<Int> tt_values(const SolveReport& r) {
  std::vector<Int> out;
  for (const auto& fp : r.fixed_points) out.push_back(fp.received.values.at("tt"));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Int> range_with(Int initial, Int lo, Int hi) {
  std::vector<Int> v{initial};
  for (Int x = lo; x <= hi; ++x) v.push_back(x);
  return v;
}

TEST(ResolveDomains, CorpusAutoRules) {
  auto d = resolve_domains(corpus::program("brun1"), 15);
  ASSERT_EQ(d.registers.size(), 1u);
  EXPECT_EQ(d.registers[0].source, DomainSource::InputRange);
  EXPECT_EQ(d.registers[0].values, range_with(-1, 1, 15));
  EXPECT_EQ(d.candidate_count(), 16u);

  d = resolve_domains(corpus::program("brun3"), 7);
  ASSERT_EQ(d.registers.size(), 2u);
  EXPECT_EQ(d.registers[0].reg, "flag");
  EXPECT_EQ(d.registers[0].source, DomainSource::Binary);
  EXPECT_EQ(d.registers[0].values, (std::vector<Int>{0, 1}));
  EXPECT_EQ(d.registers[1].values, range_with(-1, 1, 7));
  EXPECT_EQ(d.candidate_count(), 16u);
}

TEST(ResolveDomains, ExplicitDomainOverBudget) {
  Program p = corpus::program("brun1");
  p.registers[0].domain = Interval{1, 1'000'000'000};
  try {
    resolve_domains(p, 15, 100'000'000);
    FAIL() << "expected DomainTooLarge";
  } catch (const DomainTooLarge& e) {
    EXPECT_EQ(e.candidates(), 1'000'000'001u);
    EXPECT_EQ(e.budget(), 100'000'000u);
  }
  SolveOptions opts;
  opts.domain_budget = 100'000'000;
  EXPECT_THROW(solve(p, 15, opts), DomainTooLarge);
}

TEST(ResolveDomains, ExplicitDomainIncludesInitialAndSaturates) {
  const Program p = parse("program e\nttreg a init 50 domain -2..2\nreceive a -> x\n");
  const auto d = resolve_domains(p, 10);
  EXPECT_EQ(d.registers[0].values, (std::vector<Int>{-2, -1, 0, 1, 2, 50}));

  const Program wide = parse(
      "program w\nttreg a init 0 domain -9223372036854775808..9223372036854775807\n"
      "ttreg b init 0 domain -9223372036854775808..9223372036854775807\n");
  try {
    resolve_domains(wide, 10);
    FAIL();
  } catch (const DomainTooLarge& e) {
    EXPECT_EQ(e.candidates(), std::numeric_limits<std::uint64_t>::max());
  }
}

TEST(ResolveDomains, UnresolvableAutoDomain) {
  const Program p = parse("program u\nttreg a init 0 domain auto\nreceive a -> x\nsend a x + 2\n");
  EXPECT_THROW(resolve_domains(p, 10), UnresolvableDomain);
}

TEST(Classify, Rules) {
  const Int factor[] = {5};
  const Int self[] = {15};
  const Int other[] = {4};
  EXPECT_EQ(classify(factor, 15), Classification::NontrivialFactor);
  EXPECT_EQ(classify(self, 15), Classification::TrivialSelf);
  EXPECT_EQ(classify(other, 15), Classification::Other);
  EXPECT_EQ(classify({}, 15), Classification::Other);
}

TEST(Solve, Brun1AdmitsTheInputItself) {
  const auto r = solve(corpus::program("brun1"), 15);
  EXPECT_EQ(tt_values(r), (std::vector<Int>{3, 5, 15}));
  ASSERT_EQ(r.fixed_points.size(), 3u);
  EXPECT_EQ(r.fixed_points[0].classification, Classification::NontrivialFactor);
  EXPECT_EQ(r.fixed_points[1].classification, Classification::NontrivialFactor);
  EXPECT_EQ(r.fixed_points[2].classification, Classification::TrivialSelf);
  EXPECT_EQ(r.candidates_tried, 16u);
  EXPECT_EQ(r.faults, 0u);
}

TEST(Solve, Brun2ExcludesTheInputForComposites) {
  const auto r = solve(corpus::program("brun2"), 15);
  EXPECT_EQ(tt_values(r), (std::vector<Int>{3, 5}));
  for (const auto& fp : r.fixed_points) EXPECT_NE(fp.classification, Classification::TrivialSelf);
}

TEST(Solve, Brun2PrimeRunsTheLoop) {
  const auto r = solve(corpus::program("brun2"), 7);
  ASSERT_EQ(tt_values(r), std::vector<Int>{7});
  EXPECT_EQ(r.fixed_points[0].record.label_count("LOOP"), 2u);
}

TEST(Solve, Brun3PrimeSkipsTheLoop) {
  const auto r = solve(corpus::program("brun3"), 7);
  ASSERT_EQ(r.fixed_points.size(), 1u);
  EXPECT_EQ(r.fixed_points[0].received, tt_flag(7, 1));
  EXPECT_EQ(r.fixed_points[0].record.label_count("LOOP"), 0u);
  EXPECT_EQ(r.candidates_tried, 16u);
}

TEST(Solve, Brun3CompositeAlsoAdmitsFlaggedSelf) {
  const auto r = solve(corpus::program("brun3"), 15);
  std::vector<ReceivedAssignment> got;
  for (const auto& fp : r.fixed_points) got.push_back(fp.received);
  EXPECT_EQ(got, (std::vector<ReceivedAssignment>{tt_flag(3, 0), tt_flag(5, 0), tt_flag(15, 1)}));
}

TEST(Solve, GrandfatherParadoxHasNoFixedPoint) {
  const Program p = parse(
      "program gp\nttreg b init 0 domain 0..1\nreceive b -> x\nif x == 0 goto ONE\n"
      "send b 0\nhalt\nONE: send b 1\n");
  const auto r = solve(p, 2);
  EXPECT_TRUE(r.fixed_points.empty());
  EXPECT_EQ(r.candidates_tried, 2u);
}

TEST(Solve, FaultingCandidatesAreCountedSeparately) {
  const Program p = parse(
      "program fz\nttreg a init 0 domain 0..3\nreceive a -> x\nsend a x\noutput 10 mod x\n");
  const auto r = solve(p, 2);
  EXPECT_EQ(r.faults, 1u);  // x = 0
  EXPECT_EQ(r.fixed_points.size(), 3u);
}

TEST(Solve, OrderAndWorkerIndependence) {
  for (const auto& id : {"brun1", "brun2", "brun3"}) {
    const Program p = corpus::program(id);
    for (Int n : {2, 12, 49, 97, 120}) {
      SolveOptions fwd;
      fwd.compare_claims = true;
      SolveOptions bwd = fwd;
      bwd.order = EvaluationOrder::Backward;
      SolveOptions par = fwd;
      par.workers = 4;
      SolveOptions par_bwd = par;
      par_bwd.order = EvaluationOrder::Backward;
      const auto base = solve(p, n, fwd);
      EXPECT_EQ(solve(p, n, bwd), base) << id << " " << n;
      EXPECT_EQ(solve(p, n, par), base) << id << " " << n;
      EXPECT_EQ(solve(p, n, par_bwd), base) << id << " " << n;
    }
  }
}

TEST(Solve, RejectsOutOfRangeInput) {
  EXPECT_THROW(solve(corpus::program("brun1"), 1), InvalidArgument);
  EXPECT_THROW(solve(corpus::program("brun1"), kMaxInput + 1), InvalidArgument);
}

TEST(Verify, Examples) {
  const Program b1 = corpus::program("brun1");
  const Program b2 = corpus::program("brun2");
  EXPECT_TRUE(verify(b1, 15, tt(5)).consistent);
  auto r = verify(b1, 15, tt(4));
  EXPECT_FALSE(r.consistent);
  EXPECT_EQ(r.describe(), "Inconsistent(tt: sent 3 != received 4)");
  r = verify(b2, 9, tt(9));
  EXPECT_FALSE(r.consistent);
  EXPECT_EQ(r.describe(), "Inconsistent(tt: sent 3 != received 9)");
}

TEST(CompareToClaims, Examples) {
  EXPECT_TRUE(compare_to_claims(solve(corpus::program("brun2"), 15)).empty());
  EXPECT_TRUE(compare_to_claims(solve(corpus::program("brun3"), 7)).empty());
  EXPECT_TRUE(compare_to_claims(solve(corpus::program("brun1"), 15)).empty());

  const auto divs = compare_to_claims(solve(corpus::program("brun3"), 15));
  ASSERT_EQ(divs.size(), 1u);
  EXPECT_EQ(divs[0].kind, Divergence::Kind::PresentButUnexpected);
  EXPECT_EQ(divs[0].assignment, tt_flag(15, 1));
}

TEST(CompareToClaims, ReportsMissingClaimedPoints) {
  SolveReport r = solve(corpus::program("brun2"), 15);
  r.fixed_points.erase(r.fixed_points.begin());
  const auto divs = compare_to_claims(r);
  ASSERT_EQ(divs.size(), 1u);
  EXPECT_EQ(divs[0].kind, Divergence::Kind::ExpectedButAbsent);
  EXPECT_EQ(divs[0].assignment, tt(3));
}

TEST(CompareToClaims, UnknownProgram) {
  SolveReport r;
  r.program_name = "mine";
  r.n = 10;
  EXPECT_THROW(compare_to_claims(r), UnknownCorpusProgram);
}

// Soundness and completeness over the whole candidate space.
TEST(Property, FixedPointsAreExactlyTheVerifiedCandidates) {
  for (const auto& id : {"brun1", "brun2", "brun3"}) {
    const Program p = corpus::program(id);
    for (Int n = 2; n <= 30; ++n) {
      const auto report = solve(p, n);
      std::set<ReceivedAssignment> fixed;
      for (const auto& fp : report.fixed_points) fixed.insert(fp.received);
      ASSERT_EQ(fixed.size(), report.fixed_points.size());
      const auto& regs = report.domains.registers;
      std::uint64_t seen = 0;
      std::vector<std::size_t> idx(regs.size(), 0);
      for (;;) {
        ReceivedAssignment a;
        for (std::size_t r = 0; r < regs.size(); ++r) a.values[regs[r].reg] = regs[r].values[idx[r]];
        ++seen;
        ASSERT_EQ(verify(p, n, a).consistent, fixed.contains(a)) << id << " " << n << " " << to_string(a);
        std::size_t r = regs.size();
        while (r > 0 && ++idx[r - 1] == regs[r - 1].values.size()) idx[--r] = 0;
        if (r == 0) break;
      }
      ASSERT_EQ(seen, report.candidates_tried);
    }
  }
}

TEST(Property, OutputsDivideTheInputAndFixedPointsExist) {
  for (const auto& id : {"brun1", "brun2", "brun3"}) {
    const Program p = corpus::program(id);
    for (Int n = 2; n <= 300; ++n) {
      const auto report = solve(p, n);
      ASSERT_FALSE(report.fixed_points.empty()) << id << " " << n;
      for (const auto& fp : report.fixed_points) {
        for (Int o : fp.record.outputs) {
          ASSERT_GE(o, 2);
          ASSERT_EQ(n % o, 0);
        }
      }
    }
  }
}

}  // namespace
}  // namespace ctcsim
