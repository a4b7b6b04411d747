#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bitrev/bits.hpp"
#include "bitrev/recursive.hpp"
#include "bitrev/schedule.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bitrev {

// Semi-recursive method with one recursion level spread over worker threads.
struct ParallelConfig {
  unsigned threads = 0;  // 0: BITREV_THREADS, else the OpenMP default
  unsigned base_bits = kDefaultBaseBits;
  static constexpr unsigned depth_limit = 1;
};

/// requested if nonzero, else BITREV_THREADS when set to a positive integer,
/// else the runtime's default worker count.
unsigned resolve_thread_count(unsigned requested);

struct IndexRange {
  Index begin = 0;
  Index end = 0;
};

// One unit of a phase. Blocks reverse `bits` bits of a contiguous run; tiles
// address a 2^bits x 2^bits square stored at `offset`.
struct WorkItem {
  enum class Kind { kBlock, kDiagonalTile, kTilePair };

  Kind kind = Kind::kBlock;
  Index offset = 0;
  unsigned bits = 0;
  Index row = 0;
  Index col = 0;
  Index tile = 0;
};

struct ParallelPlan {
  unsigned bits = 0;
  bool even_odd_first = false;
  std::vector<WorkItem> blocks;  // run before and after the tiles
  std::vector<WorkItem> tiles;   // empty when the blocks are the whole job
};

/// Splits a width-b permutation into barrier-separated phases of
/// data-disjoint work items.
ParallelPlan plan_parallel_work(BitWidth b, unsigned base_bits);

/// Flat index ranges an item writes.
std::vector<IndexRange> write_set(const WorkItem& item);

/// Describes the first pair of items in one phase whose write sets intersect,
/// or nullopt when every phase is disjoint.
std::optional<std::string> find_write_overlap(const ParallelPlan& plan);

inline std::size_t parallel_scratch_size(BitWidth b, const ParallelConfig& cfg) {
  return b.bits() > cfg.base_bits && b.bits() % 2 == 1 ? b.length() / 2 : 0;
}

namespace detail {

template <class T>
void run_work_item(T* v, const WorkItem& item, const SwapSchedule* schedule) {
  switch (item.kind) {
    case WorkItem::Kind::kBlock:
      apply_schedule(std::span<T>(v + item.offset, Index{1} << item.bits), *schedule);
      break;
    case WorkItem::Kind::kDiagonalTile:
      transpose_diagonal_tile(v + item.offset, std::size_t{1} << item.bits, item.row, item.tile);
      break;
    case WorkItem::Kind::kTilePair:
      transpose_swap_tiles(v + item.offset, std::size_t{1} << item.bits, item.row, item.col,
                           item.tile);
      break;
  }
}

template <class T>
void run_phase(T* v, const std::vector<WorkItem>& items, const SwapSchedule* schedule,
               int threads) {
  const auto count = static_cast<std::ptrdiff_t>(items.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(threads)
#endif
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    run_work_item(v, items[static_cast<std::size_t>(k)], schedule);
  }
  (void)threads;
}

}  // namespace detail

/// Multithreaded semi-recursive permutation (depth limit 1). Phase 1 reverses
/// every row block, phase 2 transposes tile pairs, phase 3 repeats phase 1.
/// Odd b runs the even-odd pass single-threaded first (scratch n/2) and then
/// treats both halves as one batch. Output equals semi_recursive_permute.
template <class T>
void parallel_semi_recursive_permute(std::span<T> array, BitWidth b, const ParallelConfig& cfg,
                                     std::span<T> scratch) {
  detail::require_length(array, b, "parallel_semi_recursive_permute");
  RecursionPolicy{cfg.base_bits, ParallelConfig::depth_limit}.validate();
  detail::require_scratch(scratch, parallel_scratch_size(b, cfg),
                          "parallel_semi_recursive_permute");
  const ParallelPlan plan = plan_parallel_work(b, cfg.base_bits);
  const int threads = static_cast<int>(resolve_thread_count(cfg.threads));

  if (plan.even_odd_first) {
    even_odd_permute(array, b, scratch);
  }
  const SwapSchedule& schedule = cached_swap_schedule(BitWidth(plan.blocks.front().bits));
  detail::run_phase(array.data(), plan.blocks, &schedule, threads);
  if (!plan.tiles.empty()) {
    detail::run_phase(array.data(), plan.tiles, nullptr, threads);
    detail::run_phase(array.data(), plan.blocks, &schedule, threads);
  }
}

}  // namespace bitrev
