#include "bitrev/bits.hpp"

namespace bitrev {

Index rev_naive(Index i, BitWidth b) {
  detail::require_in_frame(i, b);
  return detail::reverse_bits(i, b.bits());
}

ByteReverseTable build_byte_table() {
  ByteReverseTable table;
  for (unsigned v = 0; v < 256; ++v) {
    table.entries[v] = static_cast<std::uint8_t>(rev_naive(v, BitWidth(8)));
  }
  return table;
}

const ByteReverseTable& byte_table() noexcept { return detail::kByteTable; }

Index rev_bytetable(Index i, BitWidth b, const ByteReverseTable& table) {
  detail::require_in_frame(i, b);
  return detail::reverse_bytewise(i, b.bits(), table);
}

unsigned count_leading_zeros(std::uint64_t x) {
  if (x == 0) {
    throw std::invalid_argument("count_leading_zeros of zero is undefined");
  }
#if defined(__GNUC__) || defined(__clang__)
  return static_cast<unsigned>(__builtin_clzl(x));
#else
  return static_cast<unsigned>(std::countl_zero(x));
#endif
}

unsigned count_leading_zeros_bisect(std::uint64_t x) {
  if (x == 0) {
    throw std::invalid_argument("count_leading_zeros of zero is undefined");
  }
  unsigned zeros = 0;
  for (unsigned half = kWordBits / 2; half > 0; half /= 2) {
    const std::uint64_t upper_mask = ~std::uint64_t{0} << (kWordBits - half);
    if ((x & upper_mask) == 0) {
      zeros += half;
      x <<= half;
    }
  }
  return zeros;
}

RevPair xor_next(RevPair state, BitWidth b) {
  if (state.index >= b.length() - 1) {
    throw std::out_of_range("xor_next: index " + std::to_string(state.index) +
                            " has no successor in " + std::to_string(b.bits()) + " bits");
  }
  if (state.reversed != detail::reverse_bits(state.index, b.bits())) {
    throw std::invalid_argument("xor_next: reversed value is not rev(index)");
  }
  return detail::xor_step(state, b.bits());
}

}  // namespace bitrev
