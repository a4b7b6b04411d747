#pragma once

#include <algorithm>
#include <bitset>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "bitrev/bits.hpp"

namespace bitrev::testing {

inline std::vector<Index> iota_array(std::size_t n) {
  std::vector<Index> v(n);
  std::iota(v.begin(), v.end(), Index{0});
  return v;
}

inline std::vector<Index> random_array(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Index> v(n);
  for (auto& x : v) {
    x = rng();
  }
  return v;
}

// Formats i as b binary digits, reverses the string and parses it back.
inline Index string_reverse(Index i, unsigned b) {
  std::string digits = std::bitset<64>(i).to_string().substr(64 - b);
  std::reverse(digits.begin(), digits.end());
  return std::stoull(digits, nullptr, 2);
}

// Independent of the library: element i lands at string_reverse(i).
template <class T>
std::vector<T> reference_permute(const std::vector<T>& in, unsigned b) {
  std::vector<T> out(in.size());
  for (Index i = 0; i < in.size(); ++i) {
    out[string_reverse(i, b)] = in[i];
  }
  return out;
}

inline const std::vector<Index> kCanonical8 = {0, 4, 2, 6, 1, 5, 3, 7};

}  // namespace bitrev::testing
