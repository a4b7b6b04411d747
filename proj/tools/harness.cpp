#include "harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <new>
#include <ostream>
#include <random>
#include <stdexcept>

#include "bitrev/verify.hpp"

namespace bitrev::bench {
namespace {

using Clock = std::chrono::steady_clock;

// Below this width a single permutation is too short for the clock.
constexpr unsigned kRepeatBelowBits = 12;
constexpr unsigned kMaxRepeats = 1u << 20;

template <class T>
T fill_value(Index i, std::uint64_t tag);

template <>
PairElement fill_value<PairElement>(Index i, std::uint64_t tag) {
  return {static_cast<double>(i), static_cast<double>(tag)};
}

template <>
Index fill_value<Index>(Index i, std::uint64_t tag) {
  return i | (tag << 40);
}

template <class T>
void fill(std::span<T> data, std::uint64_t tag) {
  for (Index i = 0; i < data.size(); ++i) {
    data[i] = fill_value<T>(i, tag);
  }
}

std::uint64_t fill_tag(std::uint64_t seed, unsigned replicate) {
  return (seed * 1000003u + replicate) & 0xffffff;
}

template <class T>
double seconds_per_run(MethodRunner<T>& runner, std::span<T> data, unsigned& repeats) {
  for (;;) {
    const auto t0 = Clock::now();
    for (unsigned k = 0; k < repeats; ++k) {
      runner.run(data);
    }
    const auto t1 = Clock::now();
    const double total = std::chrono::duration<double>(t1 - t0).count();
    if (total > 0 || repeats >= kMaxRepeats) {
      return total / repeats;
    }
    repeats *= 2;
  }
}

template <class T>
unsigned calibrate_repeats(MethodRunner<T>& runner, std::span<T> data, BitWidth b,
                           double min_sample_seconds) {
  if (b.bits() >= kRepeatBelowBits || min_sample_seconds <= 0) {
    return 1;
  }
  unsigned one = 1;
  const double single = seconds_per_run(runner, data, one);
  if (single <= 0) {
    return kMaxRepeats;
  }
  const double wanted = std::ceil(min_sample_seconds / single);
  return static_cast<unsigned>(std::clamp(wanted, 1.0, static_cast<double>(kMaxRepeats)));
}

// Elements the method allocates beyond the input, in units of n/2.
unsigned extra_half_arrays(Method m) {
  switch (m) {
    case Method::kStockham:
    case Method::kCobra:
      return 2;
    case Method::kRecursive:
    case Method::kSemiRecursive:
    case Method::kParallel:
      return 1;
    default:
      return 0;
  }
}

bool is_cobra(Method m) { return m == Method::kCobra || m == Method::kCobraInPlace; }

template <class T>
std::vector<BenchmarkRecord> time_method(MethodRunner<T>& runner, std::span<T> data,
                                         const std::string& name, unsigned replicates,
                                         unsigned warmup, std::uint64_t seed,
                                         double min_sample_seconds) {
  const BitWidth b = runner.bits();
  fill(data, fill_tag(seed, 0));
  for (unsigned w = 0; w < warmup; ++w) {
    runner.run(data);
  }
  unsigned repeats = calibrate_repeats(runner, data, b, min_sample_seconds);
  std::vector<BenchmarkRecord> records;
  records.reserve(replicates);
  for (unsigned r = 0; r < replicates; ++r) {
    fill(data, fill_tag(seed, r));
    const double elapsed = seconds_per_run(runner, data, repeats);
    records.push_back({name, b.bits(), r, elapsed, elapsed / static_cast<double>(b.length())});
  }
  return records;
}

template <class T>
bool verify_run(MethodRunner<T>& runner, std::span<T> data, std::uint64_t tag) {
  fill(data, tag);
  const std::vector<T> input(data.begin(), data.end());
  runner.run(data);
  const std::vector<T> expected = oracle_permute<T>(input, runner.bits());
  const std::span<const T> actual = runner.result(data);
  return std::equal(expected.begin(), expected.end(), actual.begin(), actual.end());
}

template <class T>
CobraTuning tune_cobra_typed(BitWidth b, const std::vector<unsigned>& q_candidates,
                             const TuneOptions& options) {
  if (q_candidates.empty()) {
    throw std::invalid_argument("tune_cobra: empty q candidate list");
  }
  if (!is_cobra(options.variant)) {
    throw std::invalid_argument("tune_cobra: variant must be cobra or cobra_inplace");
  }
  for (unsigned q : q_candidates) {
    if (2 * q > b.bits()) {
      throw std::invalid_argument("tune_cobra: q = " + std::to_string(q) + " exceeds b/2 for b = " +
                                  std::to_string(b.bits()));
    }
  }
  if (options.replicates < 1) {
    throw std::invalid_argument("tune_cobra: replicates must be >= 1");
  }
  CobraTuning tuning;
  tuning.b = b.bits();
  std::vector<T> data(b.length());
  for (unsigned q : q_candidates) {
    MethodOptions mo;
    mo.cobra_q = q;
    MethodRunner<T> runner(options.variant, b, mo);
    const std::string name = std::string(method_name(options.variant)) + "_q" + std::to_string(q);
    auto records = time_method<T>(runner, data, name, options.replicates, options.warmup,
                                  options.seed, options.min_sample_seconds);
    CobraTrial trial{q, 0, records.front().per_element_s, records.front().per_element_s};
    for (const BenchmarkRecord& r : records) {
      trial.mean_per_element_s += r.per_element_s;
      trial.min_per_element_s = std::min(trial.min_per_element_s, r.per_element_s);
      trial.max_per_element_s = std::max(trial.max_per_element_s, r.per_element_s);
    }
    trial.mean_per_element_s /= static_cast<double>(records.size());
    tuning.table.push_back(trial);
    tuning.records.insert(tuning.records.end(), records.begin(), records.end());
  }
  const auto best = std::min_element(
      tuning.table.begin(), tuning.table.end(),
      [](const CobraTrial& a, const CobraTrial& b) { return a.mean_per_element_s < b.mean_per_element_s; });
  tuning.best_q = best->q;
  return tuning;
}

template <class T>
BenchResult run_typed(const BenchConfig& cfg) {
  BenchResult result;
  std::mt19937_64 order_rng(cfg.seed);
  const auto notice = [&](const std::string& method, unsigned b, const std::string& reason) {
    result.skipped.push_back({method, b, reason});
    if (cfg.log) {
      *cfg.log << "skip " << method << " b=" << b << ": " << reason << '\n';
    }
  };

  for (unsigned bits = cfg.b_min; bits <= cfg.b_max; ++bits) {
    const BitWidth b(bits);
    std::vector<Method> order = cfg.methods;
    std::shuffle(order.begin(), order.end(), order_rng);

    for (Method m : order) {
      const std::string name(method_name(m));
      if (m == Method::kUnrolled && bits > cfg.unrolled_cap) {
        notice(name, bits, "above unrolled cap " + std::to_string(cfg.unrolled_cap));
        continue;
      }
      const std::uint64_t bytes =
          b.length() * sizeof(T) + (b.length() / 2) * sizeof(T) * extra_half_arrays(m);
      if (bytes > cfg.memory_cap_bytes) {
        notice(name, bits, "needs " + std::to_string(bytes) + " bytes, above memory cap");
        continue;
      }
      try {
        MethodOptions mo;
        mo.base_bits = cfg.base_bits;
        mo.depth_limit = cfg.depth_limit;
        mo.threads = cfg.threads;
        mo.cobra_q = cfg.cobra_q;
        if (is_cobra(m)) {
          if (cfg.cobra_auto) {
            TuneOptions to;
            to.variant = m;
            to.replicates = std::max(3u, cfg.replicates / 10);
            to.seed = cfg.seed;
            to.min_sample_seconds = cfg.min_sample_seconds;
            std::vector<unsigned> candidates;
            for (unsigned q = bits >= 2 ? 1 : 0; q <= std::min(bits / 2, 10u); ++q) {
              candidates.push_back(q);
            }
            CobraTuning tuning = tune_cobra_typed<T>(b, candidates, to);
            mo.cobra_q = tuning.best_q;
            if (cfg.log) {
              *cfg.log << "tuned " << name << " b=" << bits << ": q=" << tuning.best_q << '\n';
            }
            result.tunings.push_back(std::move(tuning));
          }
          const unsigned q = mo.cobra_q.value_or(default_cobra_q(b));
          if (2 * q > bits) {
            notice(name, bits, "cobra q=" + std::to_string(q) + " needs b >= " + std::to_string(2 * q));
            continue;
          }
        }
        if (m == Method::kUnrolled) {
          const auto t0 = Clock::now();
          const SwapSchedule schedule = generate_swap_schedule(b);
          const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
          result.schedule_times.push_back({bits, schedule.size(), seconds});
          if (cfg.log) {
            *cfg.log << "schedule b=" << bits << ": " << schedule.size() << " pairs in " << seconds
                     << " s\n";
          }
        }

        std::vector<T> data(b.length());
        MethodRunner<T> runner(m, b, mo);
        auto records = time_method<T>(runner, data, name, cfg.replicates, cfg.warmup, cfg.seed,
                                      cfg.min_sample_seconds);
        result.records.insert(result.records.end(), records.begin(), records.end());
        if (cfg.verify) {
          const bool ok = verify_run<T>(runner, data, fill_tag(cfg.seed, cfg.replicates - 1));
          result.verified.push_back({name, bits, ok});
          if (!ok && cfg.log) {
            *cfg.log << "VERIFY FAILED " << name << " b=" << bits << '\n';
          }
        }
      } catch (const std::bad_alloc&) {
        notice(name, bits, "allocation failed");
      }
    }
  }
  return result;
}

}  // namespace

std::optional<ElementKind> parse_element_kind(std::string_view name) {
  if (name == "pair16") {
    return ElementKind::kPair16;
  }
  if (name == "u64") {
    return ElementKind::kWord8;
  }
  return std::nullopt;
}

std::size_t element_size(ElementKind kind) {
  return kind == ElementKind::kPair16 ? sizeof(PairElement) : sizeof(Index);
}

void BenchConfig::validate() const {
  const auto fail = [](const std::string& what) { throw std::invalid_argument(what); };
  if (methods.empty()) {
    fail("no methods selected");
  }
  if (max_bits > kLargeMaxBits) {
    fail("max_bits may not exceed " + std::to_string(kLargeMaxBits));
  }
  if (b_min < 1 || b_min > b_max) {
    fail("bit range " + std::to_string(b_min) + ".." + std::to_string(b_max) + " is empty or starts below 1");
  }
  if (b_max > max_bits) {
    fail("b_max " + std::to_string(b_max) + " above the size cap " + std::to_string(max_bits) +
         " (raise it explicitly for larger runs)");
  }
  if (replicates < 1) {
    fail("replicates must be >= 1");
  }
  if (base_bits < 1 || base_bits > kDefaultScheduleCap) {
    fail("base_bits must be in [1, " + std::to_string(kDefaultScheduleCap) + "]");
  }
  if (depth_limit < 1) {
    fail("depth_limit must be >= 1");
  }
  if (unrolled_cap > kDefaultScheduleCap) {
    fail("unrolled_cap must be <= " + std::to_string(kDefaultScheduleCap));
  }
  if (cobra_q && *cobra_q > kMaxBits / 2) {
    fail("cobra_q too large");
  }
  const std::uint64_t bytes = (std::uint64_t{1} << b_max) * element_size(element);
  if (bytes > memory_cap_bytes) {
    fail("array of 2^" + std::to_string(b_max) + " elements needs " + std::to_string(bytes) +
         " bytes, above the memory cap of " + std::to_string(memory_cap_bytes));
  }
}

BenchResult run_benchmark(const BenchConfig& cfg) {
  cfg.validate();
  return cfg.element == ElementKind::kPair16 ? run_typed<PairElement>(cfg) : run_typed<Index>(cfg);
}

CobraTuning tune_cobra(BitWidth b, const std::vector<unsigned>& q_candidates,
                       const TuneOptions& options) {
  return options.element == ElementKind::kPair16
             ? tune_cobra_typed<PairElement>(b, q_candidates, options)
             : tune_cobra_typed<Index>(b, q_candidates, options);
}

}  // namespace bitrev::bench
