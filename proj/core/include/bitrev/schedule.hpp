#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bitrev/bits.hpp"

namespace bitrev {

inline constexpr unsigned kDefaultScheduleCap = 26;

struct SwapPair {
  Index lo = 0;
  Index hi = 0;

  friend constexpr bool operator==(SwapPair, SwapPair) = default;
};

// Every (i, rev(i)) with i < rev(i) for one bit width, in generation order.
class SwapSchedule {
 public:
  SwapSchedule(BitWidth bits, std::vector<SwapPair> pairs)
      : bits_(bits), pairs_(std::move(pairs)) {}

  BitWidth bits() const noexcept { return bits_; }
  std::span<const SwapPair> pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }

 private:
  BitWidth bits_;
  std::vector<SwapPair> pairs_;
};

/// Branch-and-bound enumeration of the swap pairs, working inward from the
/// outermost bit pair. For the current outer pair (top, bottom):
///   1 x 0  never smaller than its reverse, pruned;
///   0 x 1  always smaller, one swap per middle value x (ascending);
///   0 x 0, 1 x 1  smaller iff x < rev(x), recurse two bits narrower.
/// Branches are visited with top bit 0 before top bit 1. Throws if b > cap.
SwapSchedule generate_swap_schedule(BitWidth b, unsigned cap = kDefaultScheduleCap);

/// r(b) = 2^(b-2) + 2 r(b-2), r(1) = 0, r(2) = 1.
Index swap_count(BitWidth b);

/// Process-wide schedule for b <= kDefaultScheduleCap, generated on first use.
/// Safe to call concurrently.
const SwapSchedule& cached_swap_schedule(BitWidth b);

template <class T>
void apply_schedule(std::span<T> array, const SwapSchedule& schedule) {
  if (array.size() != schedule.bits().length()) {
    throw std::length_error("apply_schedule: array length " + std::to_string(array.size()) +
                            " does not match schedule width " +
                            std::to_string(schedule.bits().bits()));
  }
  T* const v = array.data();
  for (const SwapPair& p : schedule.pairs()) {
    using std::swap;
    swap(v[p.lo], v[p.hi]);
  }
}

// Unrolled method: the cached schedule for the array's width.
template <class T>
void unrolled_permute(std::span<T> array, BitWidth b) {
  apply_schedule(array, cached_swap_schedule(b));
}

// Binary cache format: "BRSCHD01", one byte b, then (lo, hi) as
// little-endian 64-bit words.
void write_schedule(std::ostream& out, const SwapSchedule& schedule);
SwapSchedule read_schedule(std::istream& in);

}  // namespace bitrev
