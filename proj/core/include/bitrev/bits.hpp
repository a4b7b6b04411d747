#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bitrev {

using Index = std::uint64_t;

inline constexpr unsigned kWordBits = 64;
inline constexpr unsigned kMaxBits = 48;

// Number of index bits b of a permutation over n = 2^b elements.
class BitWidth {
 public:
  constexpr explicit BitWidth(unsigned bits) : bits_(bits) {
    if (bits < 1 || bits > kMaxBits) {
      throw std::invalid_argument("bit width " + std::to_string(bits) +
                                  " outside [1, 48]");
    }
  }

  // Width of an array of the given length; the length must be a power of two >= 2.
  static BitWidth for_length(std::size_t length) {
    if (length < 2 || !std::has_single_bit(length)) {
      throw std::invalid_argument("array length " + std::to_string(length) +
                                  " is not a power of two >= 2");
    }
    return BitWidth(static_cast<unsigned>(std::countr_zero(length)));
  }

  constexpr unsigned bits() const noexcept { return bits_; }
  constexpr Index length() const noexcept { return Index{1} << bits_; }

  friend constexpr auto operator<=>(BitWidth, BitWidth) = default;

 private:
  unsigned bits_;
};

// Current index and its reversal while walking 0 .. 2^b - 1.
struct RevPair {
  Index index = 0;
  Index reversed = 0;

  friend constexpr bool operator==(RevPair, RevPair) = default;
};

struct ByteReverseTable {
  std::array<std::uint8_t, 256> entries{};

  constexpr std::uint8_t operator[](std::uint8_t v) const noexcept { return entries[v]; }
};

namespace detail {

// Bitwise reversal of the low `bits` bits of i; bits may be 0 (returns 0).
constexpr Index reverse_bits(Index i, unsigned bits) noexcept {
  Index out = 0;
  for (unsigned k = 0; k < bits; ++k) {
    out = (out << 1) | (i & 1);
    i >>= 1;
  }
  return out;
}

constexpr ByteReverseTable make_byte_table() noexcept {
  ByteReverseTable t;
  for (unsigned v = 0; v < 256; ++v) {
    t.entries[v] = static_cast<std::uint8_t>(reverse_bits(v, 8));
  }
  return t;
}

inline constexpr ByteReverseTable kByteTable = make_byte_table();

constexpr Index reverse_word_bytewise(Index word, const ByteReverseTable& table) noexcept {
  Index out = 0;
  for (unsigned byte = 0; byte < 8; ++byte) {
    out = (out << 8) | table[static_cast<std::uint8_t>(word >> (8 * byte))];
  }
  return out;
}

// Full-word table reversal shifted down into a frame of `bits` (bits >= 1).
constexpr Index reverse_bytewise(Index i, unsigned bits, const ByteReverseTable& table) noexcept {
  return reverse_word_bytewise(i, table) >> (kWordBits - bits);
}

// Advances (i, rev(i)) to (i + 1, rev(i + 1)) in a frame of `bits`.
// i XOR (i + 1) is a run of low ones; shifting it up against the top of the
// frame reverses it.
constexpr RevPair xor_step(RevPair s, unsigned bits) noexcept {
  const Index next = s.index + 1;
  const Index diff = s.index ^ next;
  const unsigned shift = static_cast<unsigned>(std::countl_zero(diff)) - (kWordBits - bits);
  return {next, s.reversed ^ (diff << shift)};
}

inline void require_in_frame(Index i, BitWidth b) {
  if (i >= b.length()) {
    throw std::out_of_range("index " + std::to_string(i) + " does not fit in " +
                            std::to_string(b.bits()) + " bits");
  }
}

}  // namespace detail

/// Reverses the b-bit representation of i one bit at a time.
Index rev_naive(Index i, BitWidth b);

ByteReverseTable build_byte_table();

/// Shared, immutable table; identical to build_byte_table().
const ByteReverseTable& byte_table() noexcept;

/// Table-driven reversal: the whole 64-bit word is reversed with eight
/// lookups and a byte-order swap, then shifted down into the b-bit frame.
Index rev_bytetable(Index i, BitWidth b, const ByteReverseTable& table);

/// Hardware leading-zero count over 64 bits. Throws for x == 0.
unsigned count_leading_zeros(std::uint64_t x);

/// Software fallback: halves the search window until the top set bit is found.
unsigned count_leading_zeros_bisect(std::uint64_t x);

/// One step of the inductive XOR index walk. Throws if state.index is the last
/// index of the frame or if state.reversed is not rev(state.index).
RevPair xor_next(RevPair state, BitWidth b);

}  // namespace bitrev
