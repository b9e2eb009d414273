#include <gtest/gtest.h>

#include <sstream>

#include "ctcsim/corpus.hpp"
#include "ctcsim/dsl.hpp"
#include "ctcsim/interpreter.hpp"
#include "support/reference_listings.hpp"

namespace ctcsim {
namespace {

ReceivedAssignment tt(Int v) { return {{{"tt", v}}}; }
ReceivedAssignment tt_flag(Int t, Int f) { return {{{"tt", t}, {"flag", f}}}; }

class CorpusRun : public ::testing::Test {
 protected:
  Program brun1 = corpus::program("brun1");
  Program brun2 = corpus::program("brun2");
  Program brun3 = corpus::program("brun3");
};

TEST_F(CorpusRun, Brun1SearchesWhenNothingArrives) {
  const RunRecord r = run(brun1, 15, tt(-1));
  EXPECT_EQ(r.outputs, std::vector<Int>{3});
  EXPECT_EQ(r.sends.at("tt"), std::vector<Int>{3});
  EXPECT_EQ(r.label_count("LOOP"), 2u);
  EXPECT_EQ(r.status, RunStatus::Halted);
}

TEST_F(CorpusRun, Brun1SkipsLoopWhenFactorArrives) {
  const RunRecord r = run(brun1, 15, tt(3));
  EXPECT_EQ(r.outputs, std::vector<Int>{3});
  EXPECT_EQ(r.sends.at("tt"), std::vector<Int>{3});
  EXPECT_EQ(r.label_count("LOOP"), 0u);
  EXPECT_EQ(r.status, RunStatus::Halted);
}

TEST_F(CorpusRun, Brun3PrimeWithFlagSet) {
  const RunRecord r = run(brun3, 7, tt_flag(7, 1));
  EXPECT_EQ(r.outputs, std::vector<Int>{7});
  EXPECT_EQ(r.sends.at("tt"), std::vector<Int>{7});
  EXPECT_EQ(r.sends.at("flag"), std::vector<Int>{1});
  EXPECT_EQ(r.label_count("LOOP"), 0u);
  EXPECT_TRUE(r.halted());
}

TEST_F(CorpusRun, ConsistencyVerdicts) {
  auto received = tt(3);
  EXPECT_TRUE(consistency_of(run(brun1, 15, received), received, brun1).consistent);

  received = tt(-1);
  const auto bad = consistency_of(run(brun1, 15, received), received, brun1);
  EXPECT_FALSE(bad.consistent);
  ASSERT_EQ(bad.registers.size(), 1u);
  EXPECT_EQ(bad.registers[0].last_sent, 3);
  EXPECT_EQ(bad.describe(), "Inconsistent(tt: sent 3 != received -1)");

  received = tt_flag(3, 0);
  const auto r3 = consistency_of(run(brun3, 15, received), received, brun3);
  EXPECT_TRUE(r3.consistent);
  EXPECT_FALSE(r3.registers[1].last_sent.has_value());  // flag never sent
}

TEST_F(CorpusRun, NeverSentRegisterMustHoldItsInitialValue) {
  const auto received = tt_flag(3, 1);
  const auto r = consistency_of(run(brun3, 15, received), received, brun3);
  EXPECT_FALSE(r.consistent);
  EXPECT_TRUE(r.registers[0].matches);
  EXPECT_FALSE(r.registers[1].matches);
}

TEST_F(CorpusRun, LastSendWinsAndRepeatedEqualSendsAreNotConflicts) {
  const auto received = tt_flag(7, 0);
  const RunRecord rec = run(brun3, 7, received);
  EXPECT_EQ(rec.sends.at("flag"), (std::vector<Int>{1, 1}));
  const auto r = consistency_of(rec, received, brun3);
  EXPECT_FALSE(r.consistent);
  EXPECT_FALSE(r.has_conflicting_sends());
}

TEST(Consistency, ConflictingSendsAreFlaggedButLastSendDecides) {
  const Program p = parse("program c\nttreg r init 0 domain 0..9\nreceive r -> x\nsend r 4\nsend r 5\n");
  const auto received = ReceivedAssignment{{{"r", 5}}};
  const auto res = consistency_of(run(p, 2, received), received, p);
  EXPECT_TRUE(res.consistent);
  EXPECT_TRUE(res.has_conflicting_sends());
}

TEST(Faults, ModByNonPositiveReportsLine) {
  const Program p = parse("program f\nx = 0\n\noutput 5 mod x\n");
  const RunRecord r = run(p, 10, {});
  EXPECT_EQ(r.status, RunStatus::Faulted);
  EXPECT_EQ(r.fault, FaultKind::ModByNonPositive);
  EXPECT_EQ(r.fault_line, 4);
  EXPECT_TRUE(r.outputs.empty());
}

TEST(Faults, UnboundVariable) {
  const Program p = parse("program f\noutput 1\noutput y + 1\n");
  const RunRecord r = run(p, 10, {});
  EXPECT_EQ(r.fault, FaultKind::UnboundVariable);
  EXPECT_EQ(r.fault_line, 3);
  EXPECT_EQ(r.outputs, std::vector<Int>{1});  // partial data kept
}

TEST(Faults, OverflowIsAFaultNotUndefinedBehaviour) {
  const Program p = parse("program f\nx = 9223372036854775807\nx = x + 1\n");
  EXPECT_EQ(run(p, 10, {}).fault, FaultKind::ArithmeticOverflow);
}

TEST(Faults, StepLimit) {
  const Program p = parse("program f\nttreg r init 0 domain 0..1\nL: goto L\n");
  const RunRecord r = run(p, 10, {{{"r", 0}}}, Limits{1000});
  EXPECT_EQ(r.status, RunStatus::StepLimitExceeded);
  EXPECT_EQ(r.steps, 1000u);
  EXPECT_EQ(r.label_count("L"), 1000u);
  const ReceivedAssignment zero{{{"r", 0}}};
  EXPECT_FALSE(consistency_of(r, zero, p).consistent);
}

TEST(Faults, FaultedRunIsNeverConsistent) {
  const Program p = parse("program f\nttreg r init 0 domain 0..1\nsend r 0\noutput 1 mod 0\n");
  const ReceivedAssignment zero{{{"r", 0}}};
  const RunRecord rec = run(p, 5, zero);
  ASSERT_EQ(rec.status, RunStatus::Faulted);
  EXPECT_FALSE(consistency_of(rec, zero, p).consistent);
}

TEST(Semantics, ShortCircuitGuardsTheModulo) {
  const Program p = parse(
      "program s\nx = 0\nif x > 0 and 7 mod x == 0 goto T\noutput 1\nhalt\nT: output 2\n");
  EXPECT_EQ(run(p, 2, {}).outputs, std::vector<Int>{1});
  const Program q = parse(
      "program s\nx = 0\nif x == 0 or 7 mod x == 0 goto T\noutput 1\nhalt\nT: output 2\n");
  EXPECT_EQ(run(q, 2, {}).outputs, std::vector<Int>{2});
}

TEST(Semantics, FallingOffTheEndHalts) {
  const Program p = parse("program s\noutput input\n");
  const RunRecord r = run(p, 42, {});
  EXPECT_TRUE(r.halted());
  EXPECT_EQ(r.outputs, std::vector<Int>{42});
  EXPECT_EQ(r.steps, 1u);
}

TEST(Semantics, ModIsFlooredForNegativeDividends) {
  const Program p = parse("program s\noutput -7 mod 3\n");
  EXPECT_EQ(run(p, 2, {}).outputs, std::vector<Int>{2});
}

TEST(Preconditions, RejectBadInputAndIncompleteAssignments) {
  const Program p = corpus::program("brun3");
  EXPECT_THROW(run(p, 1, tt_flag(1, 0)), InvalidArgument);
  EXPECT_THROW(run(p, kMaxInput + 1, tt_flag(1, 0)), InvalidArgument);
  EXPECT_THROW(run(p, 15, tt(3)), InvalidArgument);
  EXPECT_THROW(run(p, 15, ReceivedAssignment{{{"tt", 3}, {"flag", 0}, {"extra", 1}}}),
               InvalidArgument);
  EXPECT_THROW(run(p, 15, ReceivedAssignment{{{"tt", 3}, {"flg", 0}}}), InvalidArgument);
  EXPECT_THROW(run(p, 15, tt_flag(3, 0), Limits{0}), InvalidArgument);
}

TEST(Trace, OneLinePerExecutedStatement) {
  const Program p = corpus::program("brun1");
  std::ostringstream trace;
  const RunRecord r = run(p, 15, tt(-1), {}, &trace);
  std::size_t lines = 0;
  for (char c : trace.str()) lines += c == '\n';
  EXPECT_EQ(lines, r.steps);
  EXPECT_NE(trace.str().find(", LOOP, p = p + 1, p=2\n"), std::string::npos) << trace.str();
}

TEST_F(CorpusRun, StepAccountingAndDeterminism) {
  for (Int n = 2; n <= 60; ++n) {
    for (Int t = -1; t <= n; ++t) {
      const RunRecord a = run(brun1, n, tt(t));
      const RunRecord b = run(brun1, n, tt(t));
      ASSERT_EQ(a, b);
      std::uint64_t labelled = 0;
      for (const auto& [label, count] : a.label_counts) {
        ASSERT_LE(count, a.steps);
        labelled += count;
      }
      ASSERT_LE(labelled, a.steps);
    }
  }
}

// No received value in [-1, N] can trip the modulo in any corpus program.
TEST_F(CorpusRun, NoFaultsAcrossReceivedValues) {
  for (Int n = 2; n <= 80; ++n) {
    for (Int t = -1; t <= n; ++t) {
      ASSERT_TRUE(run(brun1, n, tt(t)).halted()) << n << " " << t;
      ASSERT_TRUE(run(brun2, n, tt(t)).halted()) << n << " " << t;
      for (Int f : {0, 1}) ASSERT_TRUE(run(brun3, n, tt_flag(t, f)).halted()) << n << " " << t;
    }
  }
}

TEST_F(CorpusRun, AgreesWithReferenceListings) {
  for (Int n = 2; n <= 150; ++n) {
    for (Int t = -1; t <= n; ++t) {
      const auto ref1 = testing::reference_brun1(n, t);
      const RunRecord r1 = run(brun1, n, tt(t));
      ASSERT_EQ(r1.outputs, std::vector<Int>{ref1.output});
      ASSERT_EQ(r1.sends, ref1.sends);
      ASSERT_EQ(r1.label_count("LOOP"), ref1.loop_iterations);
      ASSERT_EQ(r1.label_count("JUMP"), ref1.searched ? 1u : 0u);

      const auto ref2 = testing::reference_brun2(n, t);
      const RunRecord r2 = run(brun2, n, tt(t));
      ASSERT_EQ(r2.outputs, std::vector<Int>{ref2.output});
      ASSERT_EQ(r2.sends, ref2.sends);
      ASSERT_EQ(r2.label_count("LOOP"), ref2.loop_iterations);

      for (Int f : {0, 1}) {
        const auto ref3 = testing::reference_brun3(n, t, f);
        const RunRecord r3 = run(brun3, n, tt_flag(t, f));
        ASSERT_EQ(r3.outputs, std::vector<Int>{ref3.output});
        ASSERT_EQ(r3.sends, ref3.sends) << n << " " << t << " " << f;
        ASSERT_EQ(r3.label_count("LOOP"), ref3.loop_iterations);
      }
    }
  }
}

TEST(Compiled, ReusableAcrossRuns) {
  const CompiledProgram compiled(corpus::program("brun2"));
  const Int values[] = {9};
  EXPECT_EQ(compiled.run_indexed(9, values, {}).outputs, std::vector<Int>{3});
  EXPECT_EQ(compiled.run(9, tt(3)).outputs, std::vector<Int>{3});
  EXPECT_THROW(CompiledProgram(make_program("bad", {}, {Statement{std::nullopt, Goto{"X"}, {}}})),
               InvalidArgument);
}

}  // namespace
}  // namespace ctcsim
