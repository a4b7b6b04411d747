#pragma once

#include <algorithm>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bitrev/bits.hpp"

namespace bitrev {

namespace detail {

template <class T>
void require_length(std::span<T> array, BitWidth b, const char* what) {
  if (array.size() != b.length()) {
    throw std::length_error(std::string(what) + ": array length " + std::to_string(array.size()) +
                            " != 2^" + std::to_string(b.bits()));
  }
}

template <class T>
void require_scratch(std::span<T> scratch, std::size_t needed, const char* what) {
  if (scratch.size() < needed) {
    throw std::length_error(std::string(what) + ": scratch holds " +
                            std::to_string(scratch.size()) + " elements, needs " +
                            std::to_string(needed));
  }
}

template <class A, class B>
bool overlaps(std::span<A> a, std::span<B> b) {
  const auto* a0 = reinterpret_cast<const unsigned char*>(a.data());
  const auto* b0 = reinterpret_cast<const unsigned char*>(b.data());
  const std::less<const unsigned char*> lt;
  return lt(a0, b0 + b.size_bytes()) && lt(b0, a0 + a.size_bytes());
}

}  // namespace detail

/// Stable split of each aligned block of `block` elements: even offsets to the
/// first half, odd offsets to the second, staged through scratch[0, block).
template <class T>
void even_odd_pass(std::span<T> array, std::size_t block, std::span<T> scratch) {
  const std::size_t half = block / 2;
  for (std::size_t base = 0; base < array.size(); base += block) {
    T* const v = array.data() + base;
    for (std::size_t j = 0; j < half; ++j) {
      scratch[j] = v[2 * j];
      scratch[half + j] = v[2 * j + 1];
    }
    std::copy_n(scratch.data(), block, v);
  }
}

/// Stockham auto-sort: the even-odd split of every recursion level of a
/// radix-2 FFT, done up front from the whole array down to blocks of two.
/// scratch must hold at least n elements.
template <class T>
void stockham_permute(std::span<T> array, BitWidth b, std::span<T> scratch) {
  detail::require_length(array, b, "stockham_permute");
  detail::require_scratch(scratch, array.size(), "stockham_permute");
  for (std::size_t block = array.size(); block >= 2; block /= 2) {
    even_odd_pass(array, block, scratch);
  }
}

/// Visits 1 .. n-2 and swaps with the bitwise-reversed index when it is larger.
template <class T>
void naive_bitwise_permute(std::span<T> array, BitWidth b) {
  detail::require_length(array, b, "naive_bitwise_permute");
  T* const v = array.data();
  const Index n = b.length();
  for (Index index = 1; index + 1 < n; ++index) {
    const Index reversed = detail::reverse_bits(index, b.bits());
    if (index < reversed) {
      using std::swap;
      swap(v[index], v[reversed]);
    }
  }
}

template <class T>
void bytetable_permute(std::span<T> array, BitWidth b, const ByteReverseTable& table) {
  detail::require_length(array, b, "bytetable_permute");
  T* const v = array.data();
  const Index n = b.length();
  for (Index index = 1; index + 1 < n; ++index) {
    const Index reversed = detail::reverse_bytewise(index, b.bits(), table);
    if (index < reversed) {
      using std::swap;
      swap(v[index], v[reversed]);
    }
  }
}

/// Walks (index, rev(index)) with the inductive XOR step; no rev calls.
template <class T>
void xor_permute(std::span<T> array, BitWidth b) {
  detail::require_length(array, b, "xor_permute");
  T* const v = array.data();
  const Index last = b.length() - 1;
  RevPair s;
  while (s.index + 1 < last) {
    s = detail::xor_step(s, b.bits());
    if (s.index < s.reversed) {
      using std::swap;
      swap(v[s.index], v[s.reversed]);
    }
  }
}

/// Calls visit(i, j) for every swap of the pair-bitwise method, in order.
/// Pass k exchanges bit positions k and b-1-k: each index with the high bit set
/// and the low bit clear is paired with the index that has both toggled. Low
/// bits are innermost so consecutive swaps touch consecutive addresses.
template <class Visit>
void for_each_pair_bitwise_swap(BitWidth b, Visit&& visit) {
  const Index n = b.length();
  for (unsigned k = 0; k < b.bits() / 2; ++k) {
    const Index high = Index{1} << (b.bits() - 1 - k);
    const Index low = Index{1} << k;
    const Index toggle = high | low;
    for (Index upper = high; upper < n; upper += 2 * high) {
      for (Index middle = 0; middle < high; middle += 2 * low) {
        const Index base = upper | middle;
        for (Index lower = 0; lower < low; ++lower) {
          visit(base | lower, (base | lower) ^ toggle);
        }
      }
    }
  }
}

template <class T>
void pair_bitwise_permute(std::span<T> array, BitWidth b) {
  detail::require_length(array, b, "pair_bitwise_permute");
  T* const v = array.data();
  for_each_pair_bitwise_swap(b, [v](Index i, Index j) {
    using std::swap;
    swap(v[i], v[j]);
  });
}

/// Library default block width: a 2^q x 2^q buffer of at most 4096 elements.
constexpr unsigned default_cobra_q(BitWidth b) noexcept { return std::min(b.bits() / 2, 6u); }

// COBRA block parameters: indices split as x y z with |x| = |z| = q, plus the
// 2^(2q)-element transfer buffer.
template <class T>
class CobraConfig {
 public:
  explicit CobraConfig(unsigned q) : q_(q) {
    if (q > kMaxBits / 2) {
      throw std::invalid_argument("cobra q " + std::to_string(q) + " too large");
    }
    buffer_.resize(std::size_t{1} << (2 * q));
  }

  unsigned q() const noexcept { return q_; }
  std::span<T> buffer() noexcept { return buffer_; }

  void require_fits(BitWidth b) const {
    if (2 * q_ > b.bits()) {
      throw std::invalid_argument("cobra q " + std::to_string(q_) + " needs 2q <= b = " +
                                  std::to_string(b.bits()));
    }
  }

 private:
  unsigned q_;
  std::vector<T> buffer_;
};

namespace detail {

inline std::vector<Index> reversal_table(unsigned bits) {
  std::vector<Index> rev(std::size_t{1} << bits);
  for (Index i = 0; i < rev.size(); ++i) {
    rev[i] = reverse_bits(i, bits);
  }
  return rev;
}

}  // namespace detail

/// Out-of-place COBRA: dest[rev(i)] = source[i]. For each middle y, the block
/// source[x y z] is gathered into buffer[rev(x) z], then drained to
/// dest[rev(z) rev(y) x'] from buffer[x' z].
template <class T>
void cobra_out_of_place(std::span<const T> source, std::span<T> dest, CobraConfig<T>& cfg,
                        BitWidth b) {
  detail::require_length(source, b, "cobra_out_of_place source");
  detail::require_length(dest, b, "cobra_out_of_place dest");
  cfg.require_fits(b);
  if (detail::overlaps(source, dest)) {
    throw std::invalid_argument("cobra_out_of_place: source and dest overlap");
  }
  const unsigned q = cfg.q();
  const unsigned ybits = b.bits() - 2 * q;
  const Index side = Index{1} << q;
  const std::vector<Index> rev_q = detail::reversal_table(q);
  T* const buf = cfg.buffer().data();
  const T* const src = source.data();
  T* const dst = dest.data();

  for (Index y = 0; y < (Index{1} << ybits); ++y) {
    const Index rev_y = detail::reverse_bits(y, ybits);
    for (Index x = 0; x < side; ++x) {
      const T* const row = src + ((x << (ybits + q)) | (y << q));
      T* const slot = buf + (rev_q[x] << q);
      for (Index z = 0; z < side; ++z) {
        slot[z] = row[z];
      }
    }
    for (Index z = 0; z < side; ++z) {
      T* const row = dst + ((rev_q[z] << (ybits + q)) | (rev_y << q));
      for (Index x = 0; x < side; ++x) {
        row[x] = buf[(x << q) | z];
      }
    }
  }
}

/// In-place COBRA. Blocks y and rev(y) (middle bits) exchange contents, so each
/// pair is handled once, at the smaller y: load block y into the buffer, swap
/// the buffer with its destinations in block rev(y), then write the buffer
/// (now holding block rev(y)'s displaced elements) back into block y.
template <class T>
void cobra_in_place(std::span<T> array, CobraConfig<T>& cfg, BitWidth b) {
  detail::require_length(array, b, "cobra_in_place");
  cfg.require_fits(b);
  const unsigned q = cfg.q();
  const unsigned ybits = b.bits() - 2 * q;
  const Index side = Index{1} << q;
  const std::vector<Index> rev_q = detail::reversal_table(q);
  T* const buf = cfg.buffer().data();
  T* const v = array.data();

  for (Index y = 0; y < (Index{1} << ybits); ++y) {
    const Index rev_y = detail::reverse_bits(y, ybits);
    if (y > rev_y) {
      continue;
    }
    for (Index x = 0; x < side; ++x) {
      const T* const row = v + ((x << (ybits + q)) | (y << q));
      T* const slot = buf + (rev_q[x] << q);
      for (Index z = 0; z < side; ++z) {
        slot[z] = row[z];
      }
    }
    for (Index z = 0; z < side; ++z) {
      T* const row = v + ((rev_q[z] << (ybits + q)) | (rev_y << q));
      for (Index x = 0; x < side; ++x) {
        using std::swap;
        swap(row[x], buf[(x << q) | z]);
      }
    }
    for (Index x = 0; x < side; ++x) {
      T* const row = v + ((x << (ybits + q)) | (y << q));
      const T* const slot = buf + (rev_q[x] << q);
      for (Index z = 0; z < side; ++z) {
        row[z] = slot[z];
      }
    }
  }
}

}  // namespace bitrev
