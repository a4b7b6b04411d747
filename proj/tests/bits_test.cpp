#include "bitrev/bits.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "test_util.hpp"

namespace bitrev {
namespace {

using testing::string_reverse;

TEST(BitWidth, Bounds) {
  EXPECT_THROW(BitWidth(0), std::invalid_argument);
  EXPECT_THROW(BitWidth(49), std::invalid_argument);
  EXPECT_EQ(BitWidth(48).length(), Index{1} << 48);
  EXPECT_EQ(BitWidth::for_length(1024).bits(), 10u);
  EXPECT_THROW(BitWidth::for_length(1000), std::invalid_argument);
  EXPECT_THROW(BitWidth::for_length(1), std::invalid_argument);
}

TEST(RevNaive, Examples) {
  EXPECT_EQ(rev_naive(1, BitWidth(3)), 4u);
  for (unsigned b = 1; b <= kMaxBits; ++b) {
    EXPECT_EQ(rev_naive(0, BitWidth(b)), 0u);
  }
  EXPECT_EQ(rev_naive(0b0110, BitWidth(4)), 0b0110u);
}

TEST(RevNaive, MatchesStringReversal) {
  std::mt19937_64 rng(20);
  std::uniform_int_distribution<Index> dist(0, (Index{1} << 20) - 1);
  for (int k = 0; k < 1000; ++k) {
    const Index i = dist(rng);
    ASSERT_EQ(rev_naive(i, BitWidth(20)), string_reverse(i, 20)) << i;
  }
}

TEST(RevNaive, RejectsOutOfFrame) {
  EXPECT_THROW(rev_naive(8, BitWidth(3)), std::out_of_range);
  EXPECT_NO_THROW(rev_naive(7, BitWidth(3)));
}

TEST(RevNaive, Involution) {
  for (unsigned b = 1; b <= 14; ++b) {
    for (Index i = 0; i < BitWidth(b).length(); ++i) {
      ASSERT_EQ(rev_naive(rev_naive(i, BitWidth(b)), BitWidth(b)), i);
    }
  }
}

TEST(ByteTable, Entries) {
  const ByteReverseTable t = build_byte_table();
  EXPECT_EQ(t[0x00], 0x00);
  EXPECT_EQ(t[0x01], 0x80);
  EXPECT_EQ(t[0xff], 0xff);
  for (unsigned v = 0; v < 256; ++v) {
    EXPECT_EQ(t.entries[v], string_reverse(v, 8)) << v;
    EXPECT_EQ(t[t[static_cast<std::uint8_t>(v)]], v);
  }
  EXPECT_EQ(t.entries, byte_table().entries);
}

TEST(RevBytetable, Examples) {
  EXPECT_EQ(rev_bytetable(1, BitWidth(3), byte_table()), 4u);
  EXPECT_EQ(rev_bytetable(0, BitWidth(17), byte_table()), 0u);
  EXPECT_THROW(rev_bytetable(16, BitWidth(4), byte_table()), std::out_of_range);
}

TEST(RevBytetable, ExhaustiveAgreementUpTo14Bits) {
  for (unsigned b = 1; b <= 14; ++b) {
    const BitWidth w(b);
    for (Index i = 0; i < w.length(); ++i) {
      ASSERT_EQ(rev_bytetable(i, w, byte_table()), rev_naive(i, w)) << "b=" << b << " i=" << i;
    }
  }
}

TEST(RevBytetable, SampledAgreementUpTo48Bits) {
  std::mt19937_64 rng(30);
  for (unsigned b = 15; b <= kMaxBits; ++b) {
    const BitWidth w(b);
    for (int k = 0; k < 500; ++k) {
      const Index i = rng() & (w.length() - 1);
      ASSERT_EQ(rev_bytetable(i, w, byte_table()), rev_naive(i, w)) << "b=" << b;
    }
  }
}

unsigned loop_clz(std::uint64_t x) {
  unsigned top = 63;
  while (((x >> top) & 1) == 0) {
    --top;
  }
  return 63 - top;
}

TEST(CountLeadingZeros, Examples) {
  EXPECT_EQ(count_leading_zeros(1), 63u);
  EXPECT_EQ(count_leading_zeros(std::uint64_t{1} << 63), 0u);
  EXPECT_EQ(count_leading_zeros_bisect(1), 63u);
  EXPECT_EQ(count_leading_zeros_bisect(~std::uint64_t{0}), 0u);
  EXPECT_THROW(count_leading_zeros(0), std::invalid_argument);
  EXPECT_THROW(count_leading_zeros_bisect(0), std::invalid_argument);
}

TEST(CountLeadingZeros, MatchesBitScan) {
  std::mt19937_64 rng(64);
  for (int k = 0; k < 1000; ++k) {
    // Random magnitude so every leading-zero count shows up.
    const std::uint64_t x = (rng() >> (rng() % 64)) | 1;
    ASSERT_EQ(count_leading_zeros(x), loop_clz(x)) << x;
    ASSERT_EQ(count_leading_zeros_bisect(x), loop_clz(x)) << x;
  }
}

TEST(XorNext, Examples) {
  EXPECT_EQ(xor_next({0, 0}, BitWidth(3)), (RevPair{1, 4}));
  EXPECT_EQ(xor_next({3, 6}, BitWidth(3)), (RevPair{4, 1}));
}

TEST(XorNext, RejectsBadState) {
  EXPECT_THROW(xor_next({7, 7}, BitWidth(3)), std::out_of_range);
  EXPECT_THROW(xor_next({3, 5}, BitWidth(3)), std::invalid_argument);
}

TEST(XorNext, SweepReproducesReversal) {
  for (unsigned b = 1; b <= 16; ++b) {
    const BitWidth w(b);
    RevPair s;
    std::vector<bool> seen(w.length(), false);
    seen[0] = true;
    for (Index i = 1; i < w.length(); ++i) {
      s = xor_next(s, w);
      ASSERT_EQ(s.index, i);
      ASSERT_EQ(s.reversed, rev_naive(i, w)) << "b=" << b << " i=" << i;
      ASSERT_FALSE(seen[s.reversed]);
      seen[s.reversed] = true;
    }
  }
}

TEST(XorNext, DifferenceIsLowRun) {
  for (Index i = 0; i < (Index{1} << 16); ++i) {
    const Index d = i ^ (i + 1);
    ASSERT_TRUE(std::has_single_bit(d + 1)) << i;
  }
}

}  // namespace
}  // namespace bitrev
