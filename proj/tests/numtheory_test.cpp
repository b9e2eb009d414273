#include <gtest/gtest.h>

#include "ctcsim/numtheory.hpp"

namespace ctcsim::numtheory {
namespace {

TEST(FactorView, Examples) {
  auto v = factor_view(15);
  EXPECT_EQ(v.divisors_gt1, (std::vector<Int>{3, 5, 15}));
  EXPECT_EQ(v.smallest_nontrivial, 3);
  EXPECT_FALSE(v.is_prime);

  v = factor_view(7);
  EXPECT_EQ(v.divisors_gt1, std::vector<Int>{7});
  EXPECT_EQ(v.smallest_nontrivial, 7);
  EXPECT_TRUE(v.is_prime);

  v = factor_view(4);
  EXPECT_EQ(v.divisors_gt1, (std::vector<Int>{2, 4}));
  EXPECT_EQ(v.smallest_nontrivial, 2);
  EXPECT_FALSE(v.is_prime);
}

TEST(FactorView, RejectsSmallInput) {
  EXPECT_THROW(factor_view(1), InvalidArgument);
  EXPECT_THROW(factor_view(-5), InvalidArgument);
  EXPECT_FALSE(is_prime(1));
}

TEST(FactorView, DivisorsMatchExhaustiveScan) {
  for (Int n = 2; n <= 10'000; ++n) {
    const auto v = factor_view(n);
    std::vector<Int> scan;
    for (Int d = 2; d <= n; ++d) {
      if (n % d == 0) scan.push_back(d);
    }
    ASSERT_EQ(v.divisors_gt1, scan) << n;
    ASSERT_EQ(v.is_prime, scan.size() == 1) << n;
    ASSERT_EQ(v.smallest_nontrivial == n, v.is_prime) << n;
  }
}

TEST(Isqrt, MatchesDefinition) {
  for (Int n = 0; n <= 100'000; ++n) {
    const Int r = isqrt(n);
    ASSERT_LE(r * r, n);
    ASSERT_GT((r + 1) * (r + 1), n);
  }
  EXPECT_EQ(isqrt(Int{1} << 62), Int{1} << 31);
  EXPECT_EQ(isqrt(std::numeric_limits<Int>::max()), 3037000499);
  EXPECT_THROW(isqrt(-1), InvalidArgument);
}

}  // namespace
}  // namespace ctcsim::numtheory
