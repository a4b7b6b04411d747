#pragma once

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bitrev/bits.hpp"
#include "bitrev/parallel.hpp"
#include "bitrev/permutations.hpp"
#include "bitrev/recursive.hpp"
#include "bitrev/schedule.hpp"

namespace bitrev {

enum class Method {
  kStockham,
  kBitwise,
  kBytewise,
  kPair,
  kCobra,
  kCobraInPlace,
  kXor,
  kUnrolled,
  kRecursive,
  kSemiRecursive,
  kParallel,
};

inline constexpr std::array kAllMethods = {
    Method::kStockham, Method::kBitwise,      Method::kBytewise,  Method::kPair,
    Method::kCobra,    Method::kCobraInPlace, Method::kXor,       Method::kUnrolled,
    Method::kRecursive, Method::kSemiRecursive, Method::kParallel,
};

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

inline bool is_out_of_place(Method m) { return m == Method::kCobra; }

// Methods that permute without any element buffer.
inline bool is_buffer_free(Method m) {
  return m != Method::kStockham && m != Method::kCobra && m != Method::kCobraInPlace;
}

struct MethodOptions {
  std::optional<unsigned> cobra_q;  // default_cobra_q(b) when absent
  unsigned base_bits = kDefaultBaseBits;
  unsigned depth_limit = 1;  // semirecursive only
  unsigned threads = 0;      // parallel only
};

// Owns the scratch and buffers one method needs at one width, so repeated
// runs allocate nothing. Out-of-place methods write into an internal
// destination exposed by result().
template <class T>
class MethodRunner {
 public:
  MethodRunner(Method method, BitWidth b, MethodOptions options = {})
      : method_(method), bits_(b), options_(options), cobra_(cobra_q_for(method, b, options)) {
    switch (method_) {
      case Method::kStockham:
        scratch_.resize(b.length());
        break;
      case Method::kCobra:
        cobra_.require_fits(b);
        dest_.resize(b.length());
        break;
      case Method::kCobraInPlace:
        cobra_.require_fits(b);
        break;
      case Method::kUnrolled:
        cached_swap_schedule(b);
        break;
      case Method::kRecursive:
        scratch_.resize(recursive_scratch_size(b, recursion_policy()));
        break;
      case Method::kSemiRecursive:
        scratch_.resize(recursive_scratch_size(b, recursion_policy()));
        break;
      case Method::kParallel:
        scratch_.resize(parallel_scratch_size(b, parallel_config()));
        break;
      default:
        break;
    }
  }

  Method method() const noexcept { return method_; }
  BitWidth bits() const noexcept { return bits_; }
  unsigned cobra_q() const noexcept { return cobra_.q(); }

  void run(std::span<T> data) {
    switch (method_) {
      case Method::kStockham:
        stockham_permute(data, bits_, std::span<T>(scratch_));
        break;
      case Method::kBitwise:
        naive_bitwise_permute(data, bits_);
        break;
      case Method::kBytewise:
        bytetable_permute(data, bits_, byte_table());
        break;
      case Method::kPair:
        pair_bitwise_permute(data, bits_);
        break;
      case Method::kCobra:
        cobra_out_of_place(std::span<const T>(data), std::span<T>(dest_), cobra_, bits_);
        break;
      case Method::kCobraInPlace:
        cobra_in_place(data, cobra_, bits_);
        break;
      case Method::kXor:
        xor_permute(data, bits_);
        break;
      case Method::kUnrolled:
        unrolled_permute(data, bits_);
        break;
      case Method::kRecursive:
      case Method::kSemiRecursive:
        recursive_permute(data, bits_, recursion_policy(), std::span<T>(scratch_));
        break;
      case Method::kParallel:
        parallel_semi_recursive_permute(data, bits_, parallel_config(), std::span<T>(scratch_));
        break;
    }
  }

  /// The permuted output of the last run over `data`.
  std::span<const T> result(std::span<const T> data) const {
    return is_out_of_place(method_) ? std::span<const T>(dest_) : data;
  }

 private:
  static unsigned cobra_q_for(Method m, BitWidth b, const MethodOptions& o) {
    if (m != Method::kCobra && m != Method::kCobraInPlace) {
      return 0;
    }
    return o.cobra_q.value_or(default_cobra_q(b));
  }

  RecursionPolicy recursion_policy() const {
    RecursionPolicy p{options_.base_bits, std::nullopt};
    if (method_ == Method::kSemiRecursive) {
      p.depth_limit = options_.depth_limit;
    }
    return p;
  }

  ParallelConfig parallel_config() const { return {options_.threads, options_.base_bits}; }

  Method method_;
  BitWidth bits_;
  MethodOptions options_;
  CobraConfig<T> cobra_;
  std::vector<T> scratch_;
  std::vector<T> dest_;
};

}  // namespace bitrev
