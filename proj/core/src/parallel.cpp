#include "bitrev/parallel.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string_view>
#include <thread>

namespace bitrev {
namespace {

void add_segment(ParallelPlan& plan, Index offset, unsigned segment_bits, unsigned base_bits) {
  if (segment_bits <= base_bits) {
    plan.blocks.push_back({WorkItem::Kind::kBlock, offset, segment_bits});
    return;
  }
  const unsigned h = segment_bits / 2;
  const Index side = Index{1} << h;
  for (Index row = 0; row < side; ++row) {
    plan.blocks.push_back({WorkItem::Kind::kBlock, offset + row * side, h});
  }
  // 2^(h-3) rows per tile, i.e. an 8 x 8 grid of tiles when h >= 3.
  const Index tile = h >= 3 ? side / 8 : side;
  for (Index r = 0; r < side; r += tile) {
    plan.tiles.push_back({WorkItem::Kind::kDiagonalTile, offset, h, r, r, tile});
    for (Index c = r + tile; c < side; c += tile) {
      plan.tiles.push_back({WorkItem::Kind::kTilePair, offset, h, r, c, tile});
    }
  }
}

void append_tile_rows(std::vector<IndexRange>& out, const WorkItem& item, Index row,
                      Index col) {
  const Index stride = Index{1} << item.bits;
  for (Index i = 0; i < item.tile; ++i) {
    const Index begin = item.offset + (row + i) * stride + col;
    out.push_back({begin, begin + item.tile});
  }
}

std::optional<std::string> overlap_in_phase(const std::vector<WorkItem>& items, Index length,
                                            const char* phase) {
  std::vector<std::ptrdiff_t> owner(length, -1);
  for (std::size_t k = 0; k < items.size(); ++k) {
    for (const IndexRange& r : write_set(items[k])) {
      for (Index i = r.begin; i < r.end; ++i) {
        if (owner[i] >= 0) {
          return std::string(phase) + ": items " + std::to_string(owner[i]) + " and " +
                 std::to_string(k) + " both write index " + std::to_string(i);
        }
        owner[i] = static_cast<std::ptrdiff_t>(k);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

unsigned resolve_thread_count(unsigned requested) {
  if (requested > 0) {
    return requested;
  }
  if (const char* env = std::getenv("BITREV_THREADS")) {
    const std::string_view text(env);
    unsigned value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc() && end == text.data() + text.size() && value > 0) {
      return value;
    }
  }
#ifdef _OPENMP
  return static_cast<unsigned>(std::max(1, omp_get_max_threads()));
#else
  return std::max(1u, std::thread::hardware_concurrency());
#endif
}

ParallelPlan plan_parallel_work(BitWidth b, unsigned base_bits) {
  ParallelPlan plan;
  plan.bits = b.bits();
  if (b.bits() <= base_bits) {
    plan.blocks.push_back({WorkItem::Kind::kBlock, 0, b.bits()});
    return plan;
  }
  if (b.bits() % 2 == 1) {
    plan.even_odd_first = true;
    const Index half = b.length() / 2;
    add_segment(plan, 0, b.bits() - 1, base_bits);
    add_segment(plan, half, b.bits() - 1, base_bits);
  } else {
    add_segment(plan, 0, b.bits(), base_bits);
  }
  return plan;
}

std::vector<IndexRange> write_set(const WorkItem& item) {
  std::vector<IndexRange> out;
  switch (item.kind) {
    case WorkItem::Kind::kBlock:
      out.push_back({item.offset, item.offset + (Index{1} << item.bits)});
      break;
    case WorkItem::Kind::kDiagonalTile:
      append_tile_rows(out, item, item.row, item.row);
      break;
    case WorkItem::Kind::kTilePair:
      append_tile_rows(out, item, item.row, item.col);
      append_tile_rows(out, item, item.col, item.row);
      break;
  }
  return out;
}

std::optional<std::string> find_write_overlap(const ParallelPlan& plan) {
  const Index length = Index{1} << plan.bits;
  if (auto hit = overlap_in_phase(plan.blocks, length, "block phase")) {
    return hit;
  }
  return overlap_in_phase(plan.tiles, length, "tile phase");
}

}  // namespace bitrev
