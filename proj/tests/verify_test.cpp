#include "bitrev/verify.hpp"

#include <gtest/gtest.h>

#include <set>

#include "bitrev/methods.hpp"
#include "test_util.hpp"

namespace bitrev {
namespace {

using testing::iota_array;

TEST(Oracle, Examples) {
  EXPECT_EQ(oracle_permute<Index>(iota_array(8), BitWidth(3)), testing::kCanonical8);
  EXPECT_EQ(oracle_permute<Index>(iota_array(2), BitWidth(1)), iota_array(2));
  std::vector<Index> bad(6);
  EXPECT_THROW(oracle_permute<Index>(bad, BitWidth(3)), std::length_error);
}

TEST(Oracle, IsAnInvolutionAndMatchesStringReversal) {
  for (unsigned b = 1; b <= 16; ++b) {
    const auto in = testing::random_array(std::size_t{1} << b, b);
    const auto once = oracle_permute<Index>(in, BitWidth(b));
    ASSERT_EQ(once, testing::reference_permute(in, b));
    ASSERT_EQ(oracle_permute<Index>(once, BitWidth(b)), in);
  }
}

TEST(Oracle, FixedPointsArePalindromes) {
  for (unsigned b = 1; b <= 16; ++b) {
    EXPECT_EQ(fixed_point_count(BitWidth(b)), Index{1} << ((b + 1) / 2));
  }
}

TEST(CheckMethod, NaiveBitwisePasses) {
  const auto report = check_method(
      "bitwise", InPlaceMethod([](std::span<Index> a, BitWidth b) { naive_bitwise_permute(a, b); }),
      CheckOptions{1, 16, 2, 99});
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.method, "bitwise");
  EXPECT_EQ(report.b_max, 16u);
  EXPECT_EQ(report.trials, 2u);
  EXPECT_EQ(report.seed, 99u);
  EXPECT_TRUE(report.mismatches.empty());
}

TEST(CheckMethod, PlantedFaultIsLocated) {
  // Bitwise reversal that never moves index 1.
  const InPlaceMethod broken = [](std::span<Index> a, BitWidth b) {
    for (Index i = 2; i + 1 < a.size(); ++i) {
      const Index r = rev_naive(i, b);
      if (i < r) {
        std::swap(a[i], a[r]);
      }
    }
  };
  const auto report = check_method("broken", broken, CheckOptions{5, 5, 1, 1});
  ASSERT_FALSE(report.passed());
  std::set<Index> positions;
  for (const Mismatch& m : report.mismatches) {
    positions.insert(m.position);
    EXPECT_EQ(m.expected, rev_naive(m.position, BitWidth(5)));
    EXPECT_EQ(m.actual, m.position);
  }
  EXPECT_EQ(positions, (std::set<Index>{1, rev_naive(1, BitWidth(5))}));
  EXPECT_EQ(report.mismatch_count, 2u);
}

TEST(CheckMethod, OutOfPlaceConvention) {
  const OutOfPlaceMethod cobra = [](std::span<const Index> src, std::span<Index> dst, BitWidth b) {
    CobraConfig<Index> cfg(default_cobra_q(b));
    cobra_out_of_place(src, dst, cfg, b);
  };
  EXPECT_TRUE(check_method("cobra", cobra, CheckOptions{1, 14, 3, 7}).passed());
}

TEST(CheckMethod, MismatchListIsCapped) {
  const InPlaceMethod nothing = [](std::span<Index>, BitWidth) {};
  const auto report = check_method("identity", nothing, CheckOptions{10, 10, 1, 1});
  EXPECT_EQ(report.mismatch_count, (Index{1} << 10) - fixed_point_count(BitWidth(10)));
  EXPECT_EQ(report.mismatches.size(), EquivalenceReport::kMaxListedMismatches);
}

TEST(Sentinels, DistinctAndDeterministic) {
  EXPECT_EQ(sentinel_array(BitWidth(6), 0, 1), iota_array(64));
  const auto a = sentinel_array(BitWidth(10), 3, 42);
  EXPECT_EQ(a, sentinel_array(BitWidth(10), 3, 42));
  EXPECT_NE(a, sentinel_array(BitWidth(10), 4, 42));
  EXPECT_NE(a, iota_array(1024));
  std::set<Index> distinct(a.begin(), a.end());
  EXPECT_EQ(distinct.size(), 1024u);
  EXPECT_EQ(*distinct.rbegin(), 1023u);
}

TEST(SwapAudit, AllCountsAgree) {
  const auto audits = audit_swap_counts(20);
  ASSERT_EQ(audits.size(), 20u);
  for (const auto& a : audits) {
    EXPECT_TRUE(a.ok) << "b=" << a.bits;
  }
  EXPECT_EQ(audits[0].generated, 0u);
  EXPECT_EQ(audits[1].generated, 1u);
  EXPECT_EQ(audits[3].brute_force, 6u);
}

TEST(Methods, NamesRoundTrip) {
  for (Method m : kAllMethods) {
    EXPECT_EQ(parse_method(method_name(m)), m);
  }
  EXPECT_FALSE(parse_method("karp").has_value());
  EXPECT_EQ(kAllMethods.size(), 11u);
}

TEST(Methods, EveryRunnerMatchesOracle) {
  for (Method m : kAllMethods) {
    for (unsigned b = 1; b <= 14; ++b) {
      MethodRunner<Index> runner(m, BitWidth(b));
      auto data = sentinel_array(BitWidth(b), 1, b);
      const auto expected = oracle_permute<Index>(data, BitWidth(b));
      runner.run(data);
      const auto result = runner.result(data);
      ASSERT_TRUE(std::equal(result.begin(), result.end(), expected.begin(), expected.end()))
          << method_name(m) << " b=" << b;
    }
  }
}

}  // namespace
}  // namespace bitrev
