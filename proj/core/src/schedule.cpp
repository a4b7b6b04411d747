#include "bitrev/schedule.hpp"

#include <array>
#include <istream>
#include <memory>
#include <mutex>
#include <ostream>

namespace bitrev {
namespace {

class ScheduleBuilder {
 public:
  explicit ScheduleBuilder(std::vector<SwapPair>& out) : out_(out) {}

  // lo holds the index bits decided so far and hi the matching bits of its
  // reverse; `outer` bits are fixed at each end, `width` bits remain between.
  void expand(Index lo, Index hi, unsigned outer, unsigned width) {
    if (width < 2) {
      return;  // zero or one middle bit is a palindrome
    }
    const Index top = Index{1} << (outer + width - 1);
    const Index bottom = Index{1} << outer;
    // rev maps the top middle bit onto the bottom position and vice versa.
    expand(lo, hi, outer + 1, width - 2);
    emit_all_middles(lo | bottom, hi | top, outer + 1, width - 2);
    expand(lo | top | bottom, hi | top | bottom, outer + 1, width - 2);
  }

 private:
  void emit_all_middles(Index lo, Index hi, unsigned shift, unsigned width) {
    if (width == 0) {
      out_.push_back({lo, hi});
      return;
    }
    const Index count = Index{1} << width;
    RevPair middle;
    for (Index k = 0;; ++k) {
      out_.push_back({lo | (middle.index << shift), hi | (middle.reversed << shift)});
      if (k + 1 == count) {
        break;
      }
      middle = detail::xor_step(middle, width);
    }
  }

  std::vector<SwapPair>& out_;
};

constexpr std::array<char, 8> kMagic = {'B', 'R', 'S', 'C', 'H', 'D', '0', '1'};

void put_u64(std::ostream& out, std::uint64_t v) {
  std::array<char, 8> bytes;
  for (unsigned k = 0; k < 8; ++k) {
    bytes[k] = static_cast<char>((v >> (8 * k)) & 0xff);
  }
  out.write(bytes.data(), bytes.size());
}

bool get_u64(std::istream& in, std::uint64_t& v) {
  std::array<unsigned char, 8> bytes;
  if (!in.read(reinterpret_cast<char*>(bytes.data()), bytes.size())) {
    return false;
  }
  v = 0;
  for (unsigned k = 0; k < 8; ++k) {
    v |= std::uint64_t{bytes[k]} << (8 * k);
  }
  return true;
}

}  // namespace

SwapSchedule generate_swap_schedule(BitWidth b, unsigned cap) {
  if (b.bits() > cap) {
    throw std::invalid_argument("swap schedule for " + std::to_string(b.bits()) +
                                " bits exceeds the cap of " + std::to_string(cap));
  }
  std::vector<SwapPair> pairs;
  pairs.reserve(swap_count(b));
  ScheduleBuilder(pairs).expand(0, 0, 0, b.bits());
  return SwapSchedule(b, std::move(pairs));
}

Index swap_count(BitWidth b) {
  // r(1) = 0, r(2) = 1; walk the recurrence up in steps of two.
  Index r = b.bits() % 2 == 1 ? 0 : 1;
  for (unsigned k = b.bits() % 2 == 1 ? 3 : 4; k <= b.bits(); k += 2) {
    r = (Index{1} << (k - 2)) + 2 * r;
  }
  return r;
}

const SwapSchedule& cached_swap_schedule(BitWidth b) {
  static std::array<std::once_flag, kDefaultScheduleCap + 1> flags;
  static std::array<std::unique_ptr<SwapSchedule>, kDefaultScheduleCap + 1> slots;
  if (b.bits() > kDefaultScheduleCap) {
    throw std::invalid_argument("no cached swap schedule above " +
                                std::to_string(kDefaultScheduleCap) + " bits");
  }
  std::call_once(flags[b.bits()], [&] {
    slots[b.bits()] = std::make_unique<SwapSchedule>(generate_swap_schedule(b));
  });
  return *slots[b.bits()];
}

void write_schedule(std::ostream& out, const SwapSchedule& schedule) {
  out.write(kMagic.data(), kMagic.size());
  out.put(static_cast<char>(schedule.bits().bits()));
  for (const SwapPair& p : schedule.pairs()) {
    put_u64(out, p.lo);
    put_u64(out, p.hi);
  }
  if (!out) {
    throw std::runtime_error("failed to write swap schedule");
  }
}

SwapSchedule read_schedule(std::istream& in) {
  std::array<char, 8> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic) {
    throw std::runtime_error("not a swap schedule stream (bad magic)");
  }
  const int width = in.get();
  if (width == std::char_traits<char>::eof()) {
    throw std::runtime_error("truncated swap schedule header");
  }
  const BitWidth b(static_cast<unsigned>(width));
  const Index expected = swap_count(b);
  std::vector<SwapPair> pairs;
  pairs.reserve(expected);
  SwapPair p;
  while (get_u64(in, p.lo)) {
    if (!get_u64(in, p.hi)) {
      throw std::runtime_error("truncated swap pair");
    }
    if (p.hi >= b.length() || p.lo >= p.hi) {
      throw std::runtime_error("malformed swap pair");
    }
    pairs.push_back(p);
  }
  if (pairs.size() != expected) {
    throw std::runtime_error("swap schedule has " + std::to_string(pairs.size()) +
                             " pairs, expected " + std::to_string(expected));
  }
  return SwapSchedule(b, std::move(pairs));
}

}  // namespace bitrev
