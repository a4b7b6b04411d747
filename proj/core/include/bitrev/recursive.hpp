#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

#include "bitrev/bits.hpp"
#include "bitrev/permutations.hpp"
#include "bitrev/schedule.hpp"

namespace bitrev {

inline constexpr std::size_t kTransposeLeaf = 8;
inline constexpr unsigned kDefaultBaseBits = 9;

// Row-major 2^h x 2^h matrix over a region of 2^(2h) elements; the row is the
// high h index bits.
template <class T>
class SquareView {
 public:
  SquareView(std::span<T> region, unsigned h) : region_(region), h_(h) {
    if (2 * h >= kWordBits || region.size() != (std::size_t{1} << (2 * h))) {
      throw std::length_error("SquareView: region length " + std::to_string(region.size()) +
                              " is not 2^(2*" + std::to_string(h) + ")");
    }
  }

  unsigned half_bits() const noexcept { return h_; }
  std::size_t side() const noexcept { return std::size_t{1} << h_; }
  T* data() const noexcept { return region_.data(); }
  T& at(std::size_t row, std::size_t col) const noexcept { return region_[(row << h_) | col]; }

 private:
  std::span<T> region_;
  unsigned h_;
};

namespace detail {

// Swaps the s x s tile at (r, c) with the transpose of the tile at (c, r).
template <class T>
void transpose_swap_tiles(T* m, std::size_t stride, std::size_t r, std::size_t c, std::size_t s) {
  if (s <= kTransposeLeaf) {
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) {
        using std::swap;
        swap(m[(r + i) * stride + c + j], m[(c + j) * stride + r + i]);
      }
    }
    return;
  }
  const std::size_t h = s / 2;
  transpose_swap_tiles(m, stride, r, c, h);
  transpose_swap_tiles(m, stride, r, c + h, h);
  transpose_swap_tiles(m, stride, r + h, c, h);
  transpose_swap_tiles(m, stride, r + h, c + h, h);
}

// Transposes the s x s tile on the diagonal at (d, d).
template <class T>
void transpose_diagonal_tile(T* m, std::size_t stride, std::size_t d, std::size_t s) {
  if (s <= kTransposeLeaf) {
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = i + 1; j < s; ++j) {
        using std::swap;
        swap(m[(d + i) * stride + d + j], m[(d + j) * stride + d + i]);
      }
    }
    return;
  }
  const std::size_t h = s / 2;
  transpose_diagonal_tile(m, stride, d, h);
  transpose_diagonal_tile(m, stride, d + h, h);
  transpose_swap_tiles(m, stride, d, d + h, h);
}

}  // namespace detail

/// Cache-oblivious in-place transpose by quadrant subdivision: diagonal
/// quadrants recurse on themselves, the off-diagonal pair is swap-transposed
/// together. Tiles of 8 x 8 or less use direct loops.
template <class T>
void transpose_square_inplace(SquareView<T> view) {
  detail::transpose_diagonal_tile(view.data(), view.side(), 0, view.side());
}

/// new[j] = old[2j], new[n/2 + j] = old[2j + 1]. Odds go to scratch (n/2),
/// evens are compacted in place, then scratch fills the top half.
template <class T>
void even_odd_permute(std::span<T> array, BitWidth b, std::span<T> scratch) {
  detail::require_length(array, b, "even_odd_permute");
  const std::size_t half = array.size() / 2;
  detail::require_scratch(scratch, half, "even_odd_permute");
  T* const v = array.data();
  for (std::size_t j = 0; j < half; ++j) {
    scratch[j] = std::move(v[2 * j + 1]);
  }
  for (std::size_t j = 1; j < half; ++j) {
    v[j] = std::move(v[2 * j]);
  }
  std::move(scratch.data(), scratch.data() + half, v + half);
}

struct RecursionPolicy {
  unsigned base_bits = kDefaultBaseBits;
  std::optional<unsigned> depth_limit;

  void validate() const {
    if (base_bits < 1 || base_bits > kDefaultScheduleCap) {
      throw std::invalid_argument("base_bits must be in [1, " +
                                  std::to_string(kDefaultScheduleCap) + "]");
    }
    if (depth_limit && *depth_limit < 1) {
      throw std::invalid_argument("depth_limit must be >= 1");
    }
  }
};

// Counters filled in when a stats sink is passed to recursive_permute.
struct RecursionStats {
  std::size_t base_cases = 0;
  std::size_t transposes = 0;
  std::size_t even_odd_passes = 0;
  unsigned max_depth = 0;
};

namespace detail {

inline bool is_base_case(unsigned bits, unsigned depth, const RecursionPolicy& policy) {
  return bits <= policy.base_bits || (policy.depth_limit && depth >= *policy.depth_limit);
}

// Largest n/2 scratch any odd level will ask for.
inline std::size_t recursive_scratch_need(unsigned bits, unsigned depth,
                                          const RecursionPolicy& policy) {
  if (is_base_case(bits, depth, policy)) {
    return 0;
  }
  if (bits % 2 == 1) {
    return std::max<std::size_t>(std::size_t{1} << (bits - 1),
                                 recursive_scratch_need(bits - 1, depth, policy));
  }
  return recursive_scratch_need(bits / 2, depth + 1, policy);
}

template <class T>
void recursive_step(T* v, unsigned bits, unsigned depth, const RecursionPolicy& policy,
                    std::span<T> scratch, RecursionStats* stats) {
  if (stats) {
    stats->max_depth = std::max(stats->max_depth, depth);
  }
  const BitWidth b(bits);
  std::span<T> array(v, b.length());
  if (is_base_case(bits, depth, policy)) {
    if (stats) {
      ++stats->base_cases;
    }
    apply_schedule(array, cached_swap_schedule(b));
    return;
  }
  if (bits % 2 == 1) {
    // x y z -> z x y, then reverse the low b-1 bits of each half. The
    // preprocessing does not count as a recursion level.
    if (stats) {
      ++stats->even_odd_passes;
    }
    even_odd_permute(array, b, scratch);
    const std::size_t half = array.size() / 2;
    recursive_step(v, bits - 1, depth, policy, scratch, stats);
    recursive_step(v + half, bits - 1, depth, policy, scratch, stats);
    return;
  }
  const unsigned h = bits / 2;
  const std::size_t side = std::size_t{1} << h;
  for (std::size_t row = 0; row < side; ++row) {
    recursive_step(v + row * side, h, depth + 1, policy, scratch, stats);
  }
  if (stats) {
    ++stats->transposes;
  }
  transpose_square_inplace(SquareView<T>(array, h));
  for (std::size_t row = 0; row < side; ++row) {
    recursive_step(v + row * side, h, depth + 1, policy, scratch, stats);
  }
}

}  // namespace detail

/// Scratch elements recursive_permute needs for b under the policy: n/2 of the
/// largest odd level, 0 when no odd level is reached.
inline std::size_t recursive_scratch_size(BitWidth b, const RecursionPolicy& policy) {
  policy.validate();
  return detail::recursive_scratch_need(b.bits(), 0, policy);
}

/// Cache-oblivious bit reversal. For even b, index = x y with |x| = |y| = b/2:
/// reverse y within every row, transpose the 2^(b/2) square, reverse again
/// within every row. Odd b is reduced to two even halves by an even-odd pass.
/// Widths at or below policy.base_bits, and every sub-problem once the depth
/// limit is reached, run the cached swap schedule.
template <class T>
void recursive_permute(std::span<T> array, BitWidth b, const RecursionPolicy& policy,
                       std::span<T> scratch, RecursionStats* stats = nullptr) {
  detail::require_length(array, b, "recursive_permute");
  detail::require_scratch(scratch, recursive_scratch_size(b, policy), "recursive_permute");
  detail::recursive_step(array.data(), b.bits(), 0, policy, scratch, stats);
}

/// recursive_permute with a recursion depth limit; depth_limit = 1 sends the
/// first level of sub-permutations straight to the swap schedule.
template <class T>
void semi_recursive_permute(std::span<T> array, BitWidth b, unsigned base_bits,
                            unsigned depth_limit, std::span<T> scratch,
                            RecursionStats* stats = nullptr) {
  recursive_permute(array, b, RecursionPolicy{base_bits, depth_limit}, scratch, stats);
}

}  // namespace bitrev
