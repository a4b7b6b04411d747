#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bitrev/methods.hpp"

namespace bitrev::bench {

// 16 bytes, the element type FFT code permutes.
using PairElement = std::complex<double>;

enum class ElementKind { kPair16, kWord8 };

std::optional<ElementKind> parse_element_kind(std::string_view name);
std::size_t element_size(ElementKind kind);

inline constexpr unsigned kDeskMaxBits = 26;
inline constexpr unsigned kLargeMaxBits = 30;

struct BenchConfig {
  std::vector<Method> methods;
  unsigned b_min = 8;
  unsigned b_max = 20;
  unsigned replicates = 100;
  unsigned warmup = 3;
  ElementKind element = ElementKind::kPair16;
  std::optional<unsigned> cobra_q;  // default_cobra_q(b) when absent
  bool cobra_auto = false;          // tune q per size, overrides cobra_q
  unsigned base_bits = kDefaultBaseBits;
  unsigned depth_limit = 1;
  unsigned threads = 0;
  std::uint64_t seed = 1;
  bool verify = false;
  unsigned max_bits = kDeskMaxBits;
  std::uint64_t memory_cap_bytes = std::uint64_t{8} << 30;
  unsigned unrolled_cap = 16;
  double min_sample_seconds = 1e-3;  // below b = 12 samples repeat to reach this
  std::ostream* log = nullptr;       // notices; silent when null

  /// Throws std::invalid_argument describing the first problem found.
  void validate() const;
};

struct BenchmarkRecord {
  std::string method;
  unsigned b = 0;
  unsigned replicate = 0;
  double elapsed_s = 0;
  double per_element_s = 0;

  friend bool operator==(const BenchmarkRecord&, const BenchmarkRecord&) = default;
};

struct SkipNotice {
  std::string method;
  unsigned b = 0;
  std::string reason;
};

struct VerifyOutcome {
  std::string method;
  unsigned b = 0;
  bool ok = false;
};

struct ScheduleTiming {
  unsigned b = 0;
  std::size_t pairs = 0;
  double seconds = 0;
};

struct CobraTrial {
  unsigned q = 0;
  double mean_per_element_s = 0;
  double min_per_element_s = 0;
  double max_per_element_s = 0;
};

struct CobraTuning {
  unsigned b = 0;
  unsigned best_q = 0;
  std::vector<CobraTrial> table;
  std::vector<BenchmarkRecord> records;  // method "cobra_q<q>"
};

struct BenchResult {
  std::vector<BenchmarkRecord> records;
  std::vector<SkipNotice> skipped;
  std::vector<VerifyOutcome> verified;
  std::vector<ScheduleTiming> schedule_times;
  std::vector<CobraTuning> tunings;
};

/// For every size and method (method order shuffled per size): allocate once,
/// warm up, then time one permutation per replicate on a fresh deterministic
/// fill. Sizes a method cannot run at are skipped with a notice.
BenchResult run_benchmark(const BenchConfig& cfg);

struct TuneOptions {
  Method variant = Method::kCobra;
  unsigned replicates = 10;
  unsigned warmup = 1;
  ElementKind element = ElementKind::kPair16;
  std::uint64_t seed = 1;
  double min_sample_seconds = 1e-3;
};

/// Times each candidate q and returns the one with the lowest mean
/// per-element time, along with the full table.
CobraTuning tune_cobra(BitWidth b, const std::vector<unsigned>& q_candidates,
                       const TuneOptions& options = {});

inline constexpr const char* kCsvHeader = "method,b,n,replicate,elapsed_s,per_element_s";

void write_csv(const std::vector<BenchmarkRecord>& records, std::ostream& out);
void write_csv(const std::vector<BenchmarkRecord>& records, const std::filesystem::path& path);

std::vector<BenchmarkRecord> read_csv(std::istream& in);
std::vector<BenchmarkRecord> read_csv(const std::filesystem::path& path);

}  // namespace bitrev::bench
