#include "bitrev/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "bitrev/schedule.hpp"

namespace bitrev {
namespace {

void compare(EquivalenceReport& report, std::span<const Index> expected,
             std::span<const Index> actual, unsigned bits, unsigned trial) {
  for (Index i = 0; i < expected.size(); ++i) {
    if (expected[i] != actual[i]) {
      ++report.mismatch_count;
      if (report.mismatches.size() < EquivalenceReport::kMaxListedMismatches) {
        report.mismatches.push_back({bits, trial, i, expected[i], actual[i]});
      }
    }
  }
}

template <class Run>
EquivalenceReport check_with(const std::string& name, const CheckOptions& options, Run&& run) {
  EquivalenceReport report;
  report.method = name;
  report.b_min = options.b_min;
  report.b_max = options.b_max;
  report.trials = options.trials;
  report.seed = options.seed;
  for (unsigned bits = options.b_min; bits <= options.b_max; ++bits) {
    const BitWidth b(bits);
    for (unsigned trial = 0; trial < options.trials; ++trial) {
      const std::vector<Index> input = sentinel_array(b, trial, options.seed);
      const std::vector<Index> expected = oracle_permute<Index>(input, b);
      const std::vector<Index> actual = run(input, b);
      compare(report, expected, actual, bits, trial);
    }
  }
  return report;
}

}  // namespace

std::vector<Index> sentinel_array(BitWidth b, unsigned trial, std::uint64_t seed) {
  std::vector<Index> values(b.length());
  std::iota(values.begin(), values.end(), Index{0});
  if (trial > 0) {
    std::seed_seq seq{seed, std::uint64_t{b.bits()}, std::uint64_t{trial}};
    std::mt19937_64 rng(seq);
    std::shuffle(values.begin(), values.end(), rng);
  }
  return values;
}

EquivalenceReport check_method(const std::string& name, const InPlaceMethod& method,
                               const CheckOptions& options) {
  return check_with(name, options, [&](const std::vector<Index>& input, BitWidth b) {
    std::vector<Index> data = input;
    method(data, b);
    return data;
  });
}

EquivalenceReport check_method(const std::string& name, const OutOfPlaceMethod& method,
                               const CheckOptions& options) {
  return check_with(name, options, [&](const std::vector<Index>& input, BitWidth b) {
    std::vector<Index> dest(input.size());
    method(input, dest, b);
    return dest;
  });
}

Index brute_force_swap_count(BitWidth b) {
  Index count = 0;
  for (Index i = 0; i < b.length(); ++i) {
    count += i < rev_naive(i, b) ? 1 : 0;
  }
  return count;
}

Index closed_form_swap_count(BitWidth b) {
  const Index palindromes = Index{1} << ((b.bits() + 1) / 2);
  return (b.length() - palindromes) / 2;
}

Index fixed_point_count(BitWidth b) {
  Index count = 0;
  for (Index i = 0; i < b.length(); ++i) {
    count += rev_naive(i, b) == i ? 1 : 0;
  }
  return count;
}

std::vector<SwapCountAudit> audit_swap_counts(unsigned b_max) {
  std::vector<SwapCountAudit> audits;
  for (unsigned bits = 1; bits <= b_max; ++bits) {
    const BitWidth b(bits);
    SwapCountAudit a;
    a.bits = bits;
    a.generated = generate_swap_schedule(b).size();
    a.recurrence = swap_count(b);
    a.closed_form = closed_form_swap_count(b);
    a.brute_force = brute_force_swap_count(b);
    a.ok = a.generated == a.recurrence && a.recurrence == a.closed_form &&
           a.closed_form == a.brute_force;
    audits.push_back(a);
  }
  return audits;
}

}  // namespace bitrev
