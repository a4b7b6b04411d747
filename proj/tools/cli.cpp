#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "bitrev/verify.hpp"
#include "harness.hpp"

namespace bitrev::bench {
namespace {

unsigned parse_unsigned(std::string_view text) {
  unsigned value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
    throw std::invalid_argument("not a non-negative integer: '" + std::string(text) + "'");
  }
  return value;
}

struct RunArgs {
  std::string methods = "all";
  std::string bits = "8..20";
  unsigned replicates = 100;
  unsigned warmup = 3;
  std::uint64_t seed = 1;
  std::string cobra_q;
  unsigned base_bits = kDefaultBaseBits;
  unsigned depth_limit = 1;
  unsigned threads = 0;
  bool verify = false;
  std::string out;
  std::string element = "pair16";
  bool allow_large = false;
  double mem_cap_gib = 8;
  unsigned unrolled_cap = 16;
};

struct TuneArgs {
  unsigned bits = 20;
  std::string q = "1..6";
  unsigned replicates = 10;
  std::string variant = "cobra";
  std::string element = "pair16";
  std::uint64_t seed = 1;
  std::string out;
};

struct VerifyArgs {
  unsigned bits = 18;
  std::string methods = "all";
  unsigned trials = 1;
  std::uint64_t seed = 0x5eed;
};

ElementKind element_or_throw(const std::string& name) {
  const auto kind = parse_element_kind(name);
  if (!kind) {
    throw std::invalid_argument("unknown element kind '" + name + "' (pair16 or u64)");
  }
  return *kind;
}

int do_run(const RunArgs& a, std::ostream& out, std::ostream& err) {
  BenchConfig cfg;
  cfg.methods = parse_method_list(a.methods);
  std::tie(cfg.b_min, cfg.b_max) = parse_range(a.bits);
  cfg.replicates = a.replicates;
  cfg.warmup = a.warmup;
  cfg.seed = a.seed;
  if (a.cobra_q == "auto") {
    cfg.cobra_auto = true;
  } else if (!a.cobra_q.empty()) {
    cfg.cobra_q = parse_unsigned(a.cobra_q);
  }
  cfg.base_bits = a.base_bits;
  cfg.depth_limit = a.depth_limit;
  cfg.threads = a.threads;
  cfg.verify = a.verify;
  cfg.element = element_or_throw(a.element);
  cfg.max_bits = a.allow_large ? kLargeMaxBits : kDeskMaxBits;
  cfg.memory_cap_bytes = static_cast<std::uint64_t>(a.mem_cap_gib * static_cast<double>(1ull << 30));
  cfg.unrolled_cap = a.unrolled_cap;
  cfg.log = &err;

  const BenchResult result = run_benchmark(cfg);
  if (a.out.empty()) {
    write_csv(result.records, out);
  } else {
    write_csv(result.records, std::filesystem::path(a.out));
    err << "wrote " << result.records.size() << " records to " << a.out << '\n';
  }
  const bool verify_failed = std::any_of(result.verified.begin(), result.verified.end(),
                                         [](const VerifyOutcome& v) { return !v.ok; });
  if (cfg.verify) {
    err << (verify_failed ? "verify: FAILED" : "verify: all permutations match the oracle") << '\n';
  }
  return verify_failed ? 1 : 0;
}

int do_tune(const TuneArgs& a, std::ostream& out, std::ostream& err) {
  const auto [q_lo, q_hi] = parse_range(a.q);
  std::vector<unsigned> candidates;
  for (unsigned q = q_lo; q <= q_hi; ++q) {
    candidates.push_back(q);
  }
  TuneOptions options;
  const auto variant = parse_method(a.variant);
  if (!variant) {
    throw std::invalid_argument("unknown variant '" + a.variant + "'");
  }
  options.variant = *variant;
  options.replicates = a.replicates;
  options.element = element_or_throw(a.element);
  options.seed = a.seed;
  const CobraTuning tuning = tune_cobra(BitWidth(a.bits), candidates, options);

  std::ostream& table = a.out.empty() ? err : out;
  table << "q,mean_per_element_s,min_per_element_s,max_per_element_s\n";
  for (const CobraTrial& t : tuning.table) {
    table << t.q << ',' << t.mean_per_element_s << ',' << t.min_per_element_s << ','
          << t.max_per_element_s << '\n';
  }
  table << "best q=" << tuning.best_q << " for b=" << tuning.b << '\n';
  if (a.out.empty()) {
    write_csv(tuning.records, out);
  } else {
    write_csv(tuning.records, std::filesystem::path(a.out));
  }
  return 0;
}

int do_verify(const VerifyArgs& a, std::ostream& out) {
  bool all_ok = true;
  CheckOptions check;
  check.b_min = 1;
  check.b_max = a.bits;
  check.trials = a.trials;
  check.seed = a.seed;
  for (Method m : parse_method_list(a.methods)) {
    const std::string name(method_name(m));
    EquivalenceReport report;
    if (is_out_of_place(m)) {
      report = check_method(name,
                            OutOfPlaceMethod([m](std::span<const Index> src, std::span<Index> dst,
                                                 BitWidth b) {
                              MethodRunner<Index> runner(m, b);
                              std::vector<Index> data(src.begin(), src.end());
                              runner.run(data);
                              const auto res = runner.result(data);
                              std::copy(res.begin(), res.end(), dst.begin());
                            }),
                            check);
    } else {
      report = check_method(name, InPlaceMethod([m](std::span<Index> data, BitWidth b) {
                              MethodRunner<Index> runner(m, b);
                              runner.run(data);
                            }),
                            check);
    }
    out << (report.passed() ? "PASS " : "FAIL ") << name << " b=1.." << a.bits
        << " trials=" << a.trials << " mismatches=" << report.mismatch_count << '\n';
    for (const Mismatch& mm : report.mismatches) {
      out << "  b=" << mm.bits << " trial=" << mm.trial << " position=" << mm.position
          << " expected=" << mm.expected << " actual=" << mm.actual << '\n';
    }
    all_ok = all_ok && report.passed();
  }
  const unsigned audit_max = std::min(a.bits, 20u);
  bool counts_ok = true;
  for (const SwapCountAudit& audit : audit_swap_counts(audit_max)) {
    counts_ok = counts_ok && audit.ok;
    if (!audit.ok) {
      out << "  swap count mismatch b=" << audit.bits << " generated=" << audit.generated
          << " recurrence=" << audit.recurrence << " closed_form=" << audit.closed_form
          << " brute_force=" << audit.brute_force << '\n';
    }
  }
  out << (counts_ok ? "PASS " : "FAIL ") << "swap counts b=1.." << audit_max << '\n';
  return all_ok && counts_ok ? 0 : 1;
}

}  // namespace

std::pair<unsigned, unsigned> parse_range(std::string_view text) {
  const std::size_t dots = text.find("..");
  if (dots == std::string_view::npos) {
    const unsigned v = parse_unsigned(text);
    return {v, v};
  }
  const unsigned lo = parse_unsigned(text.substr(0, dots));
  const unsigned hi = parse_unsigned(text.substr(dots + 2));
  if (lo > hi) {
    throw std::invalid_argument("empty range '" + std::string(text) + "'");
  }
  return {lo, hi};
}

std::vector<Method> parse_method_list(std::string_view text) {
  if (text == "all") {
    return {kAllMethods.begin(), kAllMethods.end()};
  }
  std::vector<Method> methods;
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    const auto m = parse_method(item);
    if (!m) {
      throw std::invalid_argument("unknown method '" + std::string(item) + "'");
    }
    if (std::find(methods.begin(), methods.end(), *m) == methods.end()) {
      methods.push_back(*m);
    }
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
  }
  if (methods.empty()) {
    throw std::invalid_argument("no methods given");
  }
  return methods;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Benchmark and verify bit-reversed permutation methods"};
  app.name("bitrev-bench");
  app.require_subcommand(1);

  RunArgs run;
  CLI::App* run_cmd = app.add_subcommand("run", "Time methods over a range of sizes, emit CSV");
  run_cmd->add_option("--methods", run.methods, "Comma-separated method ids or 'all'");
  run_cmd->add_option("--bits", run.bits, "Bit range MIN..MAX");
  run_cmd->add_option("--replicates", run.replicates, "Timed runs per method and size");
  run_cmd->add_option("--warmup", run.warmup, "Untimed runs before timing");
  run_cmd->add_option("--seed", run.seed, "Seed for fills and method order");
  run_cmd->add_option("--cobra-q", run.cobra_q, "COBRA block bits, or 'auto' to tune per size");
  run_cmd->add_option("--base-bits", run.base_bits, "Recursive base case width");
  run_cmd->add_option("--depth-limit", run.depth_limit, "Semi-recursive depth limit");
  run_cmd->add_option("--threads", run.threads, "Worker threads for 'parallel' (0: BITREV_THREADS or auto)");
  run_cmd->add_flag("--verify", run.verify, "Check each method against the oracle after timing");
  run_cmd->add_option("--out", run.out, "CSV output path (stdout when omitted)");
  run_cmd->add_option("--element", run.element, "Element type: pair16 or u64");
  run_cmd->add_flag("--allow-large", run.allow_large, "Permit sizes up to 2^30");
  run_cmd->add_option("--mem-cap-gib", run.mem_cap_gib, "Memory cap for one method and size");
  run_cmd->add_option("--unrolled-cap", run.unrolled_cap, "Largest b timed for 'unrolled'");

  TuneArgs tune;
  CLI::App* tune_cmd = app.add_subcommand("tune-cobra", "Find the fastest COBRA block width");
  tune_cmd->add_option("--bits", tune.bits, "Problem width b")->required();
  tune_cmd->add_option("--q", tune.q, "Candidate range 1..Qmax");
  tune_cmd->add_option("--replicates", tune.replicates, "Timed runs per candidate");
  tune_cmd->add_option("--variant", tune.variant, "cobra or cobra_inplace");
  tune_cmd->add_option("--element", tune.element, "Element type: pair16 or u64");
  tune_cmd->add_option("--seed", tune.seed, "Fill seed");
  tune_cmd->add_option("--out", tune.out, "CSV of all timings (stdout when omitted)");

  VerifyArgs verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Check every method against the oracle");
  verify_cmd->add_option("--bits", verify.bits, "Check b = 1..MAX");
  verify_cmd->add_option("--methods", verify.methods, "Comma-separated method ids or 'all'");
  verify_cmd->add_option("--trials", verify.trials, "Sentinel arrays per size");
  verify_cmd->add_option("--seed", verify.seed, "Seed for randomized trials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*run_cmd) {
      return do_run(run, out, err);
    }
    if (*tune_cmd) {
      return do_tune(tune, out, err);
    }
    return do_verify(verify, out);
  } catch (const std::exception& e) {
    err << "bitrev-bench: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace bitrev::bench
