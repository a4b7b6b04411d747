#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "bitrev/bits.hpp"
#include "bitrev/permutations.hpp"

namespace bitrev {

/// Reference permutation: out[rev_naive(i, b)] = source[i].
template <class T>
std::vector<T> oracle_permute(std::span<const T> source, BitWidth b) {
  detail::require_length(source, b, "oracle_permute");
  std::vector<T> out(source.size());
  for (Index i = 0; i < source.size(); ++i) {
    out[rev_naive(i, b)] = source[i];
  }
  return out;
}

struct Mismatch {
  unsigned bits = 0;
  unsigned trial = 0;
  Index position = 0;
  Index expected = 0;
  Index actual = 0;
};

struct EquivalenceReport {
  std::string method;
  unsigned b_min = 1;
  unsigned b_max = 1;
  unsigned trials = 1;
  std::uint64_t seed = 0;
  std::size_t mismatch_count = 0;
  std::vector<Mismatch> mismatches;  // first kMaxListedMismatches only

  static constexpr std::size_t kMaxListedMismatches = 16;

  bool passed() const noexcept { return mismatch_count == 0; }
};

struct CheckOptions {
  unsigned b_min = 1;
  unsigned b_max = 16;
  unsigned trials = 1;
  std::uint64_t seed = 0x5eed;
};

using InPlaceMethod = std::function<void(std::span<Index>, BitWidth)>;
using OutOfPlaceMethod = std::function<void(std::span<const Index>, std::span<Index>, BitWidth)>;

/// Runs the method on sentinel arrays for every b in [b_min, b_max] and
/// compares with oracle_permute. Trial 0 uses value = index; later trials use
/// a random arrangement of 0 .. n-1 drawn from (seed, b, trial).
EquivalenceReport check_method(const std::string& name, const InPlaceMethod& method,
                               const CheckOptions& options);
EquivalenceReport check_method(const std::string& name, const OutOfPlaceMethod& method,
                               const CheckOptions& options);

/// Sentinel contents used by check_method for (b, trial).
std::vector<Index> sentinel_array(BitWidth b, unsigned trial, std::uint64_t seed);

struct SwapCountAudit {
  unsigned bits = 0;
  Index generated = 0;    // pairs emitted by generate_swap_schedule
  Index recurrence = 0;   // swap_count
  Index closed_form = 0;  // (2^b - 2^ceil(b/2)) / 2
  Index brute_force = 0;  // #{i : i < rev(i)}
  bool ok = false;
};

/// Cross-checks the three swap counts for every 1 <= b <= b_max.
std::vector<SwapCountAudit> audit_swap_counts(unsigned b_max);

Index brute_force_swap_count(BitWidth b);
Index closed_form_swap_count(BitWidth b);

/// Indices with rev(i) == i.
Index fixed_point_count(BitWidth b);

}  // namespace bitrev
